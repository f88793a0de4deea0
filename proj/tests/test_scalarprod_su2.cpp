#include "doctest.h"

#include "sprod/dwpf.hpp"
#include "sprod/parallel.hpp"
#include "sprod/randgen.hpp"
#include "sprod/scalarprod_su2.hpp"

using namespace sprod;

namespace {
EigenfunctionSpec table(const std::vector<Rat>& xs, const std::vector<Rat>& vals) {
    std::map<Rat, Rat> t;
    for (size_t i = 0; i < xs.size(); ++i) t[xs[i]] = vals[i];
    return EigenfunctionSpec::constants(t);
}
} // namespace

TEST_CASE("split enumeration") {
    auto s = enumerate_splits(3);
    REQUIRE(s.size() == 8);
    CHECK(s[0].part_I.empty());
    CHECK(s[5].part_I == std::vector<int>{0, 2});
    CHECK(s[5].part_II == std::vector<int>{1});
    // sum_k C(l,k)^2
    CHECK(enumerate_paired_splits(1).size() == 2);
    CHECK(enumerate_paired_splits(2).size() == 6);
    CHECK(enumerate_paired_splits(3).size() == 20);
}

TEST_CASE("sum formula hand values") {
    auto a = EigenfunctionSpec::xxx({Rat(0)});
    CHECK(sp_sum({Rat(3)}, {Rat(2)}, a, EigenfunctionSpec::one()) == Rat(1, 6));
    CHECK(sp_sum({}, {}, a, EigenfunctionSpec::one()) == Rat(1));
    // l = 1, free r: g(lC, lB)(r(lB) - r(lC))
    auto r = table({Rat(3), Rat(2)}, {Rat(5), Rat(7)});
    CHECK(sp_sum_normalized({Rat(3)}, {Rat(2)}, r) == Rat(2));
}

TEST_CASE("sum formula equals the chain") {
    RandomRationals rr(2024);
    for (int n = 1; n <= 3; ++n)
        for (int rep = 0; rep < 3; ++rep) {
            rr.reset_pool();
            auto w = rr.fresh(n), lc = rr.fresh(n), lb = rr.fresh(n);
            Rat direct = su2_scalar_product_direct(lc, lb, w);
            CHECK(sp_sum(lc, lb, EigenfunctionSpec::xxx(w), EigenfunctionSpec::one()) == direct);
            CHECK(sp_sum_normalized(lc, lb, EigenfunctionSpec::xxx(w)) == direct);
        }
}

TEST_CASE("sum formula with a longer chain") {
    RandomRationals rr(77);
    auto w = rr.fresh(3), lc = rr.fresh(2), lb = rr.fresh(2);
    CHECK(sp_sum(lc, lb, EigenfunctionSpec::xxx(w), EigenfunctionSpec::one()) == su2_scalar_product_direct(lc, lb, w));
}

TEST_CASE("Slavnov sum equals determinant") {
    RandomRationals rr(9);
    for (int n = 1; n <= 3; ++n) {
        rr.reset_pool();
        auto lc = rr.fresh(n), lb = rr.fresh(n);
        std::vector<Rat> rv;
        for (int i = 0; i < n; ++i) rv.push_back(rr.any());
        auto r = table(lc, rv);
        CHECK(slavnov_onshell_sum(lc, lb, r) == slavnov_det(lc, lb, r));
    }
    // r = 0: only the empty lambdaC_II survives
    auto lc = std::vector<Rat>{Rat(1, 2), Rat(5)}, lb = std::vector<Rat>{Rat(-3), Rat(8, 3)};
    auto zero = table(lc, {Rat(0), Rat(0)});
    CHECK(slavnov_det(lc, lb, zero) == slavnov_onshell_sum(lc, lb, zero));
    CHECK(slavnov_det({Rat(2)}, {Rat(5)}, table({Rat(2)}, {Rat(4)})) == Rat(1));
}

TEST_CASE("infinite limit forms") {
    CHECK(sp_infinite_values({Rat(2)}, {Rat(9)}, InfiniteForm::SUM) == Rat(8));
    CHECK(sp_infinite_values({Rat(2)}, {Rat(9)}, InfiniteForm::DET) == Rat(8));
    RandomRationals rr(31);
    for (int n = 1; n <= 3; ++n) {
        rr.reset_pool();
        auto lc = rr.fresh(n);
        std::vector<Rat> rv;
        for (int i = 0; i < n; ++i) rv.push_back(rr.any());
        Rat s = sp_infinite_values(lc, rv, InfiniteForm::SUM);
        CHECK(s == sp_infinite_values(lc, rv, InfiniteForm::DET));
        CHECK(s == sp_infinite_from_limit(lc, rv));
    }
}

TEST_CASE("infinite limit agrees with the partial domain wall") {
    RandomRationals rr(4);
    auto w = rr.fresh(3), lc = rr.fresh(2);
    auto r = eval_all(EigenfunctionSpec::xxx(w), lc);
    CHECK(sp_infinite_values(lc, r, InfiniteForm::DET) == pdwpf(lc, w, PdwpfFormula::KOSTOV));
}

TEST_CASE("thread count does not change sums") {
    RandomRationals rr(8);
    auto w = rr.fresh(3), lc = rr.fresh(3), lb = rr.fresh(3);
    Rat one = sp_sum(lc, lb, EigenfunctionSpec::xxx(w), EigenfunctionSpec::one());
    set_threads(4);
    Rat four = sp_sum(lc, lb, EigenfunctionSpec::xxx(w), EigenfunctionSpec::one());
    set_threads(1);
    CHECK(one == four);
}
