#include "doctest.h"

#include "sprod/spinchain_su3.hpp"
#include "sprod/dwpf.hpp"
#include "sprod/scalarprod_su3.hpp"

using namespace sprod;

namespace {
Su3ChainSpec chain() { return {{Rat(1, 3)}, {Rat(5, 2)}}; }
}

TEST_CASE("su3 pseudo-vacuum eigenvalues") {
    auto spec = chain();
    Rat x(7, 4);
    auto vac = su3_vacuum<Rat>(1, 1);
    auto t = su3_monodromy<Rat>(x, spec.ws, spec.vs);
    Rat a1 = weight_f(x, spec.ws[0]), a3 = weight_f(spec.vs[0], x);
    CHECK((act(t[0], vac) - a1 * vac).is_zero());
    CHECK((act(t[4], vac) - vac).is_zero());
    CHECK((act(t[8], vac) - a3 * vac).is_zero());
    for (int i = 1; i < 3; ++i)
        for (int j = 0; j < i; ++j) CHECK(act(t[static_cast<size_t>(i * 3 + j)], vac).is_zero());
    CHECK((act_left(vac, t[4]) - vac).is_zero());
}

TEST_CASE("su3 rational (1,1) root is an exact eigenvector") {
    auto spec = chain();
    Rat w = spec.ws[0], v = spec.vs[0];
    std::vector<Rat> lam{(Rat(2) * w + v) / Rat(3)}, mu{(w + Rat(2) * v) / Rat(3)};
    // r2 = a2/a3 = 1/f(v, x)
    auto r2 = EigenfunctionSpec::constants({{mu[0], Rat(1) / weight_f(v, mu[0])}});
    auto res = su3_bethe_residuals(lam, mu, EigenfunctionSpec::xxx(spec.ws), r2);
    CHECK(res.first[0] == Rat(0));
    CHECK(res.second[0] == Rat(0));
    for (Rat x : {Rat(-3, 7), Rat(2), Rat(11, 5)}) CHECK(su3_transfer_residual_exact(x, lam, mu, spec) == Rat(0));
    CHECK(!nested_bethe_state(lam, mu, spec.ws, spec.vs).is_zero());
}

TEST_CASE("su3 off-shell vector is not an eigenvector") {
    auto spec = chain();
    CHECK(su3_transfer_residual_exact(Rat(2), {Rat(1, 7)}, {Rat(4, 9)}, spec) != Rat(0));
}

TEST_CASE("su3 numeric (1,1) solve") {
    Su3ChainSpec spec{{Rat(1, 3), Rat(-1, 2)}, {Rat(5, 2)}};
    auto sols = solve_su3_bethe_numeric(spec, 1, 1, 7);
    REQUIRE(!sols.empty());
    for (const auto& s : sols) {
        std::vector<Complex> lam{s[0]}, mu{s[1]};
        CHECK(su3_bethe_residual_numeric(lam, mu, spec) < 1e-10);
        CHECK(su3_transfer_check(Rat(3, 7), lam, mu, spec) < 1e-8);
    }
    CHECK(solve_su3_bethe_numeric(spec, 1, 1, 7) == sols);
}

TEST_CASE("su3 direct product is symmetric under chain reversal sanity") {
    auto spec = chain();
    Rat a = su3_scalar_product_direct({Rat(1, 5)}, {Rat(2, 7)}, {Rat(-1, 3)}, {Rat(3, 4)}, spec);
    Rat b = su3_scalar_product_direct({Rat(1, 5)}, {Rat(2, 7)}, {Rat(-1, 3)}, {Rat(3, 4)}, spec);
    CHECK(a == b);
    CHECK_THROWS_AS(su3_scalar_product_direct({Rat(1)}, {}, {Rat(1)}, {Rat(2)}, spec), Error);
}

TEST_CASE("su3 single lambda state is t12 on the vacuum") {
    auto spec = chain();
    Rat l(3, 7);
    auto t = su3_monodromy<Rat>(l, spec.ws, spec.vs);
    CHECK((nested_bethe_state<Rat>({l}, {}, spec.ws, spec.vs) - act(t[1], su3_vacuum<Rat>(1, 1))).is_zero());
    CHECK(nested_bethe_state<Rat>({}, {}, spec.ws, spec.vs).get(2) == Rat(1));
}

TEST_CASE("su3 commutation t32(x) t12(y)") {
    auto spec = chain();
    Rat x(2, 5), y(-7, 3);
    auto tx = su3_monodromy<Rat>(x, spec.ws, spec.vs), ty = su3_monodromy<Rat>(y, spec.ws, spec.vs);
    Operator lhs = tx[7] * ty[1];
    Operator rhs = weight_f(x, y) * (ty[1] * tx[7]) - weight_g(x, y) * (tx[1] * ty[7]);
    CHECK((lhs - rhs).is_zero());
}

TEST_CASE("su3 intertwining relation on one-site chains") {
    // sum R[ij,kl] t_ka(x) t_lb(y) = sum t_jl(y) t_ik(x) R[kl,ab]
    for (auto spec : {Su3ChainSpec{{Rat(1, 4)}, {}}, Su3ChainSpec{{}, {Rat(-2, 3)}}}) {
        Rat x(5, 3), y(-1, 2);
        auto tx = su3_monodromy<Rat>(x, spec.ws, spec.vs), ty = su3_monodromy<Rat>(y, spec.ws, spec.vs);
        auto r = rmatrix_entries<Rat>(VertexKind::SU3, x, y);
        auto R = [&](int i, int j, int k, int l) { return r[static_cast<size_t>(3 * i + j) * 9 + 3 * k + l]; };
        auto T = [](const std::vector<Operator>& t, int i, int j) { return t[static_cast<size_t>(3 * i + j)]; };
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b) {
                        Operator lhs(3), rhs(3);
                        for (int k = 0; k < 3; ++k)
                            for (int l = 0; l < 3; ++l) {
                                lhs = lhs + R(i, j, k, l) * (T(tx, k, a) * T(ty, l, b));
                                rhs = rhs + R(k, l, a, b) * (T(ty, j, l) * T(tx, i, k));
                            }
                        ok = ok && (lhs - rhs).is_zero();
                    }
        CHECK(ok);
    }
}

TEST_CASE("su3 chain product factorizes at the special w, v") {
    // (1,1) chain: w -> lC_II + lB_I, v -> muC_II + muB_I, approached along eps
    Rat lC(1, 3), lB(-5, 2), mC(7, 4), mB(-2, 5);
    for (bool w_to_C : {true, false})
        for (bool v_to_C : {true, false}) {
            Rat wt = w_to_C ? lC : lB, vt = v_to_C ? mC : mB;
            auto sample = [&](const Rat& eps) -> std::optional<Rat> {
                try {
                    Su3ChainSpec spec{{wt + eps}, {vt - Rat(2) * eps}};
                    Rat s = su3_scalar_product_direct({mC}, {lC}, {lB}, {mB}, spec);
                    return s / (weight_f(lC, spec.ws[0]) * weight_f(lB, spec.ws[0]) * weight_f(spec.vs[0], mC) * weight_f(spec.vs[0], mB));
                } catch (const Error&) {
                    return std::nullopt;
                }
            };
            Rat lhs = ratfunc_eval(reconstruct_ratfunc(sample), Rat(0));
            // C_II / B_I are the sets sent to w, v
            std::vector<Rat> lCI, lCII, lBI, lBII, mCI, mCII, mBI, mBII;
            (w_to_C ? lCII : lCI).push_back(lC);
            (w_to_C ? lBII : lBI).push_back(lB);
            (v_to_C ? mCII : mCI).push_back(mC);
            (v_to_C ? mBII : mBI).push_back(mB);
            Rat rhs = f_set(mCI, lCI) * f_set(mBII, lBII) * z_su3_sum<Rat>(lBII, mCI, lCII, mBI) * z_su3_sum<Rat>(lCI, mBII, lBI, mCII) /
                      (f_set(lCI, lBI) * f_set(lBII, lCII) * f_set(mBI, mCI) * f_set(mCII, mBII));
            INFO("w_to_C=", w_to_C, " v_to_C=", v_to_C);
            CHECK(lhs == rhs);
        }
}
