#include "doctest.h"

#include "sprod/exactnum.hpp"

using namespace sprod;

namespace {
RatFunc x() { return RatFunc::var(); }
}

TEST_CASE("rat canonical form and parsing") {
    CHECK(Rat(2, 4).str() == "1/2");
    CHECK(Rat(3, -6).str() == "-1/2");
    CHECK(Rat(0, 5).str() == "0");
    CHECK(Rat::parse("-10/4") == Rat(-5, 2));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK_THROWS_AS(Rat::parse("1/0"), Error);
    CHECK_THROWS_AS(Rat::parse("abc"), Error);
    Rat a(7, 3), b(-11, 5);
    CHECK((a + b) - b == a);
    CHECK(Rat::parse(a.str()) == a);
    CHECK_THROWS_AS(a / Rat(0), Error);
}

TEST_CASE("ratfunc_eval") {
    RatFunc f = (x() + 1) / x();
    CHECK(ratfunc_eval(f, Rat(2)) == Rat(3, 2));
    RatFunc shifted = (x() - RatFunc(Rat(0)) + 1) / (x() - RatFunc(Rat(0)));
    CHECK(ratfunc_eval(shifted, Rat(1)) == Rat(2));
    RatFunc p = RatFunc(1) / (x() - 5);
    try {
        ratfunc_eval(p, Rat(5));
        FAIL("expected a pole");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PoleAtPoint);
    }
}

TEST_CASE("ratfunc_limit") {
    CHECK(ratfunc_limit(RatFunc(1) / (x() - 7), 1) == Rat(1));
    CHECK(ratfunc_limit((x() + 1) / x(), 0) == Rat(1));
    CHECK(ratfunc_limit(RatFunc(3) / (x() * x() + 1), 1) == Rat(0));
    try {
        ratfunc_limit((x() * x() + 1) / x(), 0);
        FAIL("expected divergence");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivergentLimit);
    }
    RatFunc f = (x() * 2 + 3) / (x() * x() - 4), g = (x() * x() * 5 + 1) / (x() * 3 + 1);
    CHECK(ratfunc_limit(f, 1) == Rat(2));
    CHECK(ratfunc_limit(f * g, 0) == Rat(10, 3));
}

TEST_CASE("ratfunc reduced form") {
    RatFunc f = (x() * x() - 1) / (x() * 2 - 2);
    CHECK(f == (x() + 1) / RatFunc(2));
    CHECK(f.den().size() == 1);
    CHECK(f.den().back() == Rat(1));
    RatFunc g = RatFunc(1) / (x() * 3 + 1) + RatFunc(1) / (x() * 3 + 1);
    CHECK(g.den().back() == Rat(1));
    CHECK(g * (x() * 3 + 1) == RatFunc(2));
    CHECK((f - f).is_zero());
}

TEST_CASE("det_exact") {
    Matrix<Rat> id(3, 3);
    for (int i = 0; i < 3; ++i) id(i, i) = Rat(1);
    CHECK(det_exact(id) == Rat(1));
    Matrix<Rat> m(2, 2);
    m(0, 0) = 1; m(0, 1) = 2; m(1, 0) = 3; m(1, 1) = 4;
    CHECK(det_exact(m) == Rat(-2));
    Matrix<Rat> k(2, 2);
    k(0, 0) = Rat(1, 6); k(0, 1) = Rat(1, 2); k(1, 0) = Rat(1, 20); k(1, 1) = Rat(1, 12);
    CHECK(det_exact(k) == Rat(-1, 90));
    Matrix<Rat> bad(2, 3);
    CHECK_THROWS_AS(det_exact(bad), Error);
    Matrix<Rat> rep(3, 3);
    long vals[9] = {2, -1, 5, 3, 0, 7, 2, -1, 5};
    for (int i = 0; i < 9; ++i) rep.a[i] = Rat(vals[i]);
    CHECK(det_exact(rep).is_zero());
    // zero pivot forces a row swap
    Matrix<Rat> piv(3, 3);
    long pv[9] = {0, 1, 2, 1, 0, 3, 4, -3, 8};
    for (int i = 0; i < 9; ++i) piv.a[i] = Rat(pv[i]);
    CHECK(det_exact(piv) == Rat(-2));
}

TEST_CASE("det_exact is alternating and multilinear") {
    Matrix<Rat> m(3, 3);
    long v[9] = {3, -2, 7, 1, 4, -5, 6, 0, 2};
    for (int i = 0; i < 9; ++i) m.a[i] = Rat(v[i], (i % 3) + 1);
    Rat d = det_exact(m);
    Matrix<Rat> s = m;
    for (int j = 0; j < 3; ++j) std::swap(s(0, j), s(2, j));
    CHECK(det_exact(s) == -d);
    Matrix<Rat> t = m;
    for (int j = 0; j < 3; ++j) t(1, j) *= Rat(5, 7);
    CHECK(det_exact(t) == d * Rat(5, 7));
}

TEST_CASE("det_exact over rational functions") {
    Matrix<RatFunc> m(2, 2);
    m(0, 0) = x(); m(0, 1) = RatFunc(1);
    m(1, 0) = RatFunc(1); m(1, 1) = x();
    CHECK(det_exact(m) == x() * x() - 1);
}

TEST_CASE("rational reconstruction") {
    RatFunc target = (x() * x() * 3 - 1) / ((x() + 2) * (x() - Rat(1, 2)));
    RatFunc got = reconstruct_ratfunc([&](const Rat& t) -> std::optional<Rat> {
        try {
            return ratfunc_eval(target, t);
        } catch (const Error&) {
            return std::nullopt;
        }
    });
    CHECK(got == target);
}

TEST_CASE("sequential limit of a two-variable expression") {
    // variable 0 is b (symbolic), variable 1 is a
    auto e = [](const std::vector<Rat>& outer) {
        RatFunc a(outer[0]), b = x();
        return a * b / ((a * a + 1) * (b + a));
    };
    // lim_b E = a/(a^2+1), then lim_a a * that = 1
    CHECK(sequential_limit(2, {0, 1}, e) == Rat(1));
    CHECK(sequential_limit(2, {0, 0}, e) == Rat(0));
    CHECK_THROWS_AS(sequential_limit(2, {0, 2}, e), Error);
}
