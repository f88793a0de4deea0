#pragma once

#include <utility>
#include <vector>

#include "sprod/scalarprod_su2.hpp"
#include "sprod/spinchain_su3.hpp"

namespace sprod {

// Lattice value of Z({l},{mu}|{w},{v}) by brute-force contraction.
Rat z_su3_oracle(const std::vector<Rat>& lambdas, const std::vector<Rat>& mus, const std::vector<Rat>& ws, const std::vector<Rat>& vs);

// f(muI, muII) f(lII, lI) f(muI, lI) Z(lII|muII)
template <class S>
S k_coefficient(const std::vector<S>& lI, const std::vector<S>& lII, const std::vector<S>& muI, const std::vector<S>& muII);

// Partition sum over l = lI + lII, mu = muI + muII with |lII| = |muII|:
// K Z(lI + muII | w) Z(v | muI + lII).
template <class S>
S z_su3_sum(const std::vector<S>& lambdas, const std::vector<S>& mus, const std::vector<S>& ws, const std::vector<S>& vs);

// Split pairs kept and skipped by the |lII| = |muII| rule.
struct SplitCensus {
    int kept = 0;
    int skipped = 0;
};
SplitCensus su3_split_census(int l, int m);

enum class ZLimit { MU_INF, LAMBDA_INF, V_INF, W_INF };
const char* zlimit_name(ZLimit which);

/*
 * Closed forms of (1/k!) lim x_k ... x_1 Z with one whole set sent to infinity.
 * The three remaining sets are passed in the order they appear in
 * (lambda, mu, w, v) with the sent set removed.
 */
Rat z_su3_limit(ZLimit which, const std::vector<Rat>& a, const std::vector<Rat>& b, const std::vector<Rat>& c, int l, int m);
// The same limit taken exactly on z_su3_sum. highest_first = false sends
// index 1 first instead of index k.
Rat z_su3_limit_from_sum(ZLimit which, const std::vector<Rat>& a, const std::vector<Rat>& b, const std::vector<Rat>& c, int l, int m,
                         bool highest_first = true);

// (f(mu, w) Z(l|w), partition sum)
std::pair<Rat, Rat> lemma1_check(const std::vector<Rat>& lambdas, const std::vector<Rat>& mus, const std::vector<Rat>& ws);

/*
 * Double-partition sum for the SU(3) scalar product. The lambda sets carry a1
 * on (lB_I, lC_II) and a2 on (lB_II, lC_I); the mu sets carry a2 on
 * (muB_II, muC_I) and a3 on (muB_I, muC_II). Values are passed per set.
 */
template <class S>
struct Su3Weights {
    std::vector<S> a1C, a2C_l, a1B, a2B_l; // per lambdaC, lambdaB
    std::vector<S> a2C_m, a3C, a2B_m, a3B; // per muC, muB
};

template <class S>
S su3_sp_sum_values(const std::vector<S>& muC, const std::vector<S>& lambdaC, const std::vector<S>& lambdaB, const std::vector<S>& muB,
                    const Su3Weights<S>& wt);

Rat su3_sp_sum(const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB, const std::vector<Rat>& muB,
               const EigenfunctionSpec& a1, const EigenfunctionSpec& a2, const EigenfunctionSpec& a3);
// Divided by a2(lB) a2(lC) a3(muB) a3(muC); r1 = a1/a2, r2 = a2/a3.
Rat su3_sp_sum_normalized(const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB,
                          const std::vector<Rat>& muB, const EigenfunctionSpec& r1, const EigenfunctionSpec& r2);

// Normalized sum with r1(lB), r2(muB) fixed by the nested Bethe equations;
// r1C, r2C are free values at lambdaC, muC.
template <class S>
S su3_sp_onshell_sum(const std::vector<S>& muC, const std::vector<S>& lambdaC, const std::vector<S>& lambdaB, const std::vector<S>& muB,
                     const std::vector<S>& r1C, const std::vector<S>& r2C);

enum class FactorLimit { MUB_INF, LAMB_INF };

// Product of determinants left after sending muB (or lambdaB) to infinity.
Rat su3_sp_factorized(FactorLimit limit, const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC, const std::vector<Rat>& survivingB,
                      const std::vector<Rat>& r1C, const std::vector<Rat>& r2C);
// The intermediate sum forms of the same two quantities, evaluated as sums.
Rat su3_sp_factorized_sum(FactorLimit limit, const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC,
                          const std::vector<Rat>& survivingB, const std::vector<Rat>& r1C, const std::vector<Rat>& r2C);
// (1/k!) sequential limit of su3_sp_onshell_sum, highest index first.
Rat su3_sp_factorized_from_limit(FactorLimit limit, const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC,
                                 const std::vector<Rat>& survivingB, const std::vector<Rat>& r1C, const std::vector<Rat>& r2C);

enum class StaggerOrder { LAMBDA_THEN_MU, MU_THEN_LAMBDA };

// Both B sets sent to infinity along powers of one variable.
Rat staggered_double_limit(StaggerOrder order, const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC, const std::vector<Rat>& r1C,
                           const std::vector<Rat>& r2C);
// Closed forms the two orders produce.
Rat staggered_closed_form(StaggerOrder order, const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC, const std::vector<Rat>& r1C,
                          const std::vector<Rat>& r2C);

} // namespace sprod
