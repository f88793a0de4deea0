#include "doctest.h"

#include "sprod/dwpf.hpp"
#include "sprod/parallel.hpp"
#include "sprod/randgen.hpp"
#include "sprod/scalarprod_su3.hpp"

using namespace sprod;

namespace {

struct ZInstance {
    std::vector<Rat> lambdas, mus, ws, vs;
};

ZInstance random_instance(RandomRationals& rng, int l, int m) {
    rng.reset_pool();
    return {rng.fresh(l), rng.fresh(m), rng.fresh(l), rng.fresh(m)};
}

std::vector<Rat> rs(std::initializer_list<long> xs) {
    std::vector<Rat> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// Z divided by f(l, w) f(mu, w) f(v, l) f(v, mu)
RatFunc z_tilde(const std::vector<RatFunc>& l, const std::vector<RatFunc>& mu, const std::vector<RatFunc>& w,
                const std::vector<RatFunc>& v) {
    return z_su3_sum(l, mu, w, v) / (f_set(l, w) * f_set(mu, w) * f_set(v, l) * f_set(v, mu));
}

} // namespace

TEST_CASE("lattice Z hand value and degenerate shapes") {
    CHECK(z_su3_oracle(rs({2}), rs({0}), rs({1}), rs({3})) == Rat(-1, 3));
    CHECK(z_su3_oracle(rs({2}), {}, rs({1}), {}) == weight_g(Rat(2), Rat(1)));
    CHECK(z_su3_oracle({}, rs({0}), {}, rs({3})) == weight_g(Rat(3), Rat(0)));
    CHECK_THROWS_AS(z_su3_oracle(rs({2}), rs({0}), rs({1, 4}), rs({3})), Error);
}

TEST_CASE("partition sum hand expansion at (1,1)") {
    Rat l(2), mu(0), w(1), v(3);
    Rat hand = weight_f(mu, l) * weight_g(l, w) * weight_g(v, mu) + weight_g(l, mu) * weight_g(mu, w) * weight_g(v, l);
    CHECK(hand == Rat(-1, 3));
    CHECK(z_su3_sum<Rat>({l}, {mu}, {w}, {v}) == hand);
}

TEST_CASE("partition sum equals the lattice") {
    RandomRationals rng(11);
    for (auto [l, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}})
        for (int rep = 0; rep < (l + m == 4 ? 2 : 4); ++rep) {
            auto z = random_instance(rng, l, m);
            CHECK(z_su3_sum(z.lambdas, z.mus, z.ws, z.vs) == z_su3_oracle(z.lambdas, z.mus, z.ws, z.vs));
        }
}

TEST_CASE("split census") {
    CHECK(su3_split_census(1, 1).kept == 2);
    CHECK(su3_split_census(2, 2).kept == 6);
    CHECK(su3_split_census(2, 2).skipped == 10);
    CHECK(su3_split_census(2, 0).kept == 1);
}

TEST_CASE("K coefficient isolates one term of the normalized Z") {
    // w -> lI + muII, v -> muI + lII along eps; at eps = 0 only K survives
    Rat l(2), mu(-3, 2);
    RatFunc eps = RatFunc::var();
    for (bool l_in_II : {false, true}) {
        std::vector<RatFunc> lI, lII, muI, muII;
        (l_in_II ? lII : lI).push_back(RatFunc(l));
        (l_in_II ? muII : muI).push_back(RatFunc(mu));
        auto w = l_in_II ? muII : lI;
        auto v = l_in_II ? lII : muI;
        w[0] += eps;
        v[0] -= RatFunc(Rat(2)) * eps;
        RatFunc zt = z_tilde({RatFunc(l)}, {RatFunc(mu)}, w, v);
        RatFunc k = k_coefficient(lI, lII, muI, muII);
        RatFunc d = f_set(lII, lI) * f_set(lII, muII) * f_set(muI, lI) * f_set(muI, muII);
        CHECK(ratfunc_eval(zt, Rat(0)) == ratfunc_eval(k / (d * d), Rat(0)));
    }
}

TEST_CASE("limits of Z at (1,1) hand values") {
    auto l = rs({2}), w = rs({1}), v = rs({3}), mu = rs({0});
    CHECK(z_su3_limit(ZLimit::MU_INF, l, w, v, 1, 1) == Rat(-1));
    CHECK(z_su3_limit_from_sum(ZLimit::MU_INF, l, w, v, 1, 1) == Rat(-1));
    CHECK(z_su3_limit(ZLimit::V_INF, l, mu, w, 1, 1) == weight_f(Rat(0), Rat(1)) * weight_g(Rat(2), Rat(1)));
    CHECK(z_su3_limit(ZLimit::W_INF, l, mu, v, 1, 1) == -weight_f(Rat(3), Rat(2)) * weight_g(Rat(3), Rat(0)));
}

TEST_CASE("limits of Z match sequential limits of the sum") {
    RandomRationals rng(5);
    for (auto [l, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        auto z = random_instance(rng, l, m);
        for (auto which : {ZLimit::MU_INF, ZLimit::LAMBDA_INF, ZLimit::V_INF, ZLimit::W_INF}) {
            const std::vector<Rat>*a, *b, *c;
            switch (which) {
            case ZLimit::MU_INF: a = &z.lambdas, b = &z.ws, c = &z.vs; break;
            case ZLimit::LAMBDA_INF: a = &z.mus, b = &z.ws, c = &z.vs; break;
            case ZLimit::V_INF: a = &z.lambdas, b = &z.mus, c = &z.ws; break;
            default: a = &z.lambdas, b = &z.mus, c = &z.vs; break;
            }
            INFO(zlimit_name(which), " l=", l, " m=", m);
            Rat closed = z_su3_limit(which, *a, *b, *c, l, m);
            CHECK(z_su3_limit_from_sum(which, *a, *b, *c, l, m) == closed);
            if (l + m == 3) CHECK(z_su3_limit_from_sum(which, *a, *b, *c, l, m, false) == closed);
        }
    }
}

TEST_CASE("f(mu, w) Z(l|w) as a partition sum") {
    RandomRationals rng(3);
    for (auto [l, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 0}}) {
        rng.reset_pool();
        auto lam = rng.fresh(l), mu = rng.fresh(m), w = rng.fresh(l);
        auto [lhs, rhs] = lemma1_check(lam, mu, w);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("SU(3) sum formula equals the chain") {
    RandomRationals rng(21);
    for (auto [l, m] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}})
        for (int rep = 0; rep < 2; ++rep) {
            rng.reset_pool();
            Su3ChainSpec spec{rng.fresh(l), rng.fresh(m)};
            auto lC = rng.fresh(l), lB = rng.fresh(l), mC = rng.fresh(m), mB = rng.fresh(m);
            auto a1 = EigenfunctionSpec::xxx(spec.ws), a2 = EigenfunctionSpec::one(), a3 = EigenfunctionSpec::xxx_anti(spec.vs);
            INFO("l=", l, " m=", m);
            CHECK(su3_sp_sum(mC, lC, lB, mB, a1, a2, a3) == su3_scalar_product_direct(mC, lC, lB, mB, spec));
        }
    CHECK(su3_sp_sum({}, {}, {}, {}, EigenfunctionSpec::one(), EigenfunctionSpec::one(), EigenfunctionSpec::one()) == Rat(1));
}

TEST_CASE("SU(3) sum reduces to SU(2) at m = 0") {
    RandomRationals rng(8);
    auto lC = rng.fresh(2), lB = rng.fresh(2), ws = rng.fresh(2);
    auto a = EigenfunctionSpec::xxx(ws), d = EigenfunctionSpec::constants({{lC[0], Rat(3)}, {lC[1], Rat(-2)}, {lB[0], Rat(5, 2)}, {lB[1], Rat(1, 7)}});
    CHECK(su3_sp_sum({}, lC, lB, {}, a, d, EigenfunctionSpec::one()) == sp_sum(lC, lB, a, d));
    std::vector<Rat> r{Rat(2, 3), Rat(-4)};
    CHECK(su3_sp_onshell_sum<Rat>({}, lC, lB, {}, r, {}) == slavnov_onshell_sum_values(lC, lB, r));
    CHECK(su3_sp_onshell_sum<Rat>(lC, {}, {}, lB, {}, r) == slavnov_onshell_sum_values(lC, lB, r));
}

TEST_CASE("factorized limits") {
    RandomRationals rng(13);
    for (auto [l, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {1, 0}}) {
        rng.reset_pool();
        auto lC = rng.fresh(l), mC = rng.fresh(m), lB = rng.fresh(l), mB = rng.fresh(m);
        std::vector<Rat> r1, r2;
        for (int i = 0; i < l; ++i) r1.push_back(rng.any());
        for (int i = 0; i < m; ++i) r2.push_back(rng.any());
        INFO("l=", l, " m=", m);
        Rat f1 = su3_sp_factorized(FactorLimit::MUB_INF, mC, lC, lB, r1, r2);
        CHECK(su3_sp_factorized_sum(FactorLimit::MUB_INF, mC, lC, lB, r1, r2) == f1);
        CHECK(su3_sp_factorized_from_limit(FactorLimit::MUB_INF, mC, lC, lB, r1, r2) == f1);
        if (m > 0) {
            Rat f2 = su3_sp_factorized(FactorLimit::LAMB_INF, mC, lC, mB, r1, r2);
            CHECK(su3_sp_factorized_sum(FactorLimit::LAMB_INF, mC, lC, mB, r1, r2) == f2);
            CHECK(su3_sp_factorized_from_limit(FactorLimit::LAMB_INF, mC, lC, mB, r1, r2) == f2);
        }
    }
    CHECK(su3_sp_factorized(FactorLimit::MUB_INF, {}, rs({2}), rs({5}), {Rat(3)}, {}) == slavnov_det_values(rs({2}), rs({5}), {Rat(3)}));
}

TEST_CASE("staggered limits do not commute") {
    std::vector<Rat> mC{Rat(1, 3)}, lC{Rat(-5, 2)}, r1{Rat(2)}, r2{Rat(-7, 3)};
    Rat a = staggered_double_limit(StaggerOrder::LAMBDA_THEN_MU, mC, lC, r1, r2);
    Rat b = staggered_double_limit(StaggerOrder::MU_THEN_LAMBDA, mC, lC, r1, r2);
    CHECK(a == staggered_closed_form(StaggerOrder::LAMBDA_THEN_MU, mC, lC, r1, r2));
    CHECK(b == staggered_closed_form(StaggerOrder::MU_THEN_LAMBDA, mC, lC, r1, r2));
    CHECK(a != b);
}

TEST_CASE("SU(3) sum is thread-count invariant") {
    RandomRationals rng(4);
    auto lC = rng.fresh(2), lB = rng.fresh(2), mC = rng.fresh(1), mB = rng.fresh(1);
    std::vector<Rat> r1{Rat(2), Rat(3)}, r2{Rat(5)};
    set_threads(1);
    Rat one = su3_sp_onshell_sum(mC, lC, lB, mB, r1, r2);
    set_threads(3);
    Rat three = su3_sp_onshell_sum(mC, lC, lB, mB, r1, r2);
    set_threads(1);
    CHECK(one == three);
}
