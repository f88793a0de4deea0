#include "doctest.h"

#include "sprod/dwpf.hpp"

using namespace sprod;

namespace {
std::vector<Rat> rv(std::initializer_list<Rat> xs) { return xs; }
}

TEST_CASE("domain wall values") {
    CHECK(dwpf_izergin(rv({2, 4}), rv({0, 1})) == Rat(2, 3));
    CHECK(dwpf_kostov(rv({2, 4}), rv({0, 1})) == Rat(2, 3));
    auto lam = rv({2, 5, -3}), w = rv({0, 1, Rat(9, 2)});
    CHECK(dwpf_izergin(lam, w) == Rat(-19, 25));
    CHECK(dwpf_kostov(lam, w) == Rat(-19, 25));
    CHECK(dwpf_izergin(rv({}), rv({})) == Rat(1));
    CHECK(dwpf_izergin(rv({2}), rv({0})) == Rat(1, 2));
}

TEST_CASE("izergin form survives l - w = -1") {
    // entries with l_i - w_j + 1 = 0 would divide by zero in the naive form
    CHECK(dwpf_izergin(rv({0}), rv({1})) == Rat(-1));
    CHECK(dwpf_izergin(rv({0, 3}), rv({1, 5})) == dwpf_kostov(rv({0, 3}), rv({1, 5})));
}

TEST_CASE("errors") {
    try {
        dwpf_izergin(rv({1, 1}), rv({0, 2}));
        FAIL("expected duplicate");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DuplicateRapidity);
    }
    CHECK_THROWS_AS(dwpf_izergin(rv({1}), rv({0, 2})), Error);
    CHECK_THROWS_AS(dwpf_izergin(rv({1}), rv({1})), Error);
    try {
        pdwpf(rv({1, 2}), rv({0, 3}), PdwpfFormula::IZERGIN);
        FAIL("expected size error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeError);
    }
}

TEST_CASE("partial domain wall") {
    for (auto f : {PdwpfFormula::IZERGIN, PdwpfFormula::KOSTOV, PdwpfFormula::LATTICE}) {
        CHECK(pdwpf(rv({2}), rv({0, 1}), f) == Rat(2));
        CHECK(pdwpf(rv({2, 5}), rv({0, 1, 3}), f) == Rat(-1, 2));
    }
    CHECK(pdwpf_from_limit(rv({2}), rv({0, 1})) == Rat(2));
    CHECK(pdwpf_from_limit(rv({2, 5}), rv({0, 1, 3})) == Rat(-1, 2));
    CHECK(pdwpf(rv({}), rv({0, 1}), PdwpfFormula::KOSTOV) == Rat(1));
}

TEST_CASE("partial domain wall from two-step limit") {
    auto lam = rv({Rat(1, 2)}), w = rv({0, 3, -2});
    Rat direct = pdwpf(lam, w, PdwpfFormula::LATTICE);
    CHECK(pdwpf_from_limit(lam, w) == direct);
    CHECK(pdwpf(lam, w, PdwpfFormula::IZERGIN) == direct);
}

TEST_CASE("all rapidities on one side infinite") {
    for (int l = 1; l <= 3; ++l) {
        std::vector<Rat> fixed;
        for (int i = 0; i < l; ++i) fixed.push_back(Rat(3 * i - 1, 2));
        CHECK(dwpf_all_infinite_limit(InfSide::LAMBDA, fixed) == dwpf_all_infinite(InfSide::LAMBDA, l));
        CHECK(dwpf_all_infinite_limit(InfSide::W, fixed) == dwpf_all_infinite(InfSide::W, l));
    }
}

TEST_CASE("izergin over rational functions matches pointwise") {
    std::vector<RatFunc> lam{RatFunc::var(), RatFunc(Rat(5))}, w{RatFunc(Rat(0)), RatFunc(Rat(1))};
    RatFunc z = dwpf_izergin(lam, w);
    CHECK(ratfunc_eval(z, Rat(2)) == dwpf_izergin(rv({2, 5}), rv({0, 1})));
    CHECK(ratfunc_eval(z, Rat(-7, 3)) == dwpf_kostov(rv({Rat(-7, 3), 5}), rv({0, 1})));
}
