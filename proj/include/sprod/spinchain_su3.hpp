#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sprod/spinchain_su2.hpp"

namespace sprod {

// Mixed chain: fundamental sites at ws followed by anti-fundamental sites at vs.
struct Su3ChainSpec {
    std::vector<Rat> ws;
    std::vector<Rat> vs;

    size_t sites() const { return ws.size() + vs.size(); }
};

template <class S>
std::vector<SparseOp<S>> su3_monodromy(const S& x, const std::vector<S>& ws, const std::vector<S>& vs) {
    std::vector<VertexKind> kinds(ws.size(), VertexKind::SU3);
    kinds.insert(kinds.end(), vs.size(), VertexKind::SU3STAR);
    std::vector<S> ys = ws;
    ys.insert(ys.end(), vs.begin(), vs.end());
    return chain_monodromy<S>(x, kinds, ys);
}

// t_{ij}(x), 1-based indices.
Operator su3_monodromy_entry(int i, int j, const Rat& x, const Su3ChainSpec& spec);

// State 1 on every fundamental site, state 3 on every anti-fundamental one.
template <class S>
SparseVec<S> su3_vacuum(size_t nw, size_t nv) {
    int dim = 1, idx = 0;
    for (size_t i = 0; i < nw + nv; ++i) {
        dim *= 3;
        idx = idx * 3 + (i < nw ? 0 : 2);
    }
    return SparseVec<S>::basis(dim, idx);
}

/*
 * Nested Bethe vectors. The ket applies B2(mu_1)...B2(mu_m) to |0> x |up>
 * in H x V_alpha_1..alpha_l, where B2 is the (1,2) entry of the secondary
 * monodromy D(x) R(x, l_l)...R(x, l_1) (R normalized by 1/f), and then
 * contracts each alpha_k leg with t_{1, a_k + 1}(l_k). The dual is built on
 * its own from R(x, l_l)...R(x, l_1) D(x), entry (2,1).
 */
template <class S>
SparseVec<S> nested_bethe_state(const std::vector<S>& lambdas, const std::vector<S>& mus, const std::vector<S>& ws,
                                const std::vector<S>& vs);
template <class S>
SparseVec<S> dual_nested_bethe_state(const std::vector<S>& lambdas, const std::vector<S>& mus, const std::vector<S>& ws,
                                     const std::vector<S>& vs);

// prod f(muC, lC) f(muB, lB) * <Psi'(lC, muC)|Psi(lB, muB)>
Rat su3_scalar_product_direct(const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB,
                              const std::vector<Rat>& muB, const Su3ChainSpec& spec);

// Residuals of the two nested Bethe systems, zero on shell.
std::pair<std::vector<Rat>, std::vector<Rat>> su3_bethe_residuals(const std::vector<Rat>& lambdas, const std::vector<Rat>& mus,
                                                                  const EigenfunctionSpec& r1, const EigenfunctionSpec& r2);

// a1(x) prod f(l, x) + a2(x) prod f(mu, x) prod f(x, l) + a3(x) prod f(x, mu) on the chain.
template <class S>
S su3_transfer_eigenvalue(const S& x, const std::vector<S>& lambdas, const std::vector<S>& mus, const std::vector<S>& ws,
                          const std::vector<S>& vs);
// Secondary eigenvalue a2(x) prod f(mu, x) + a3(x) prod 1/f(x, l) prod f(x, mu).
template <class S>
S su3_transfer_eigenvalue2(const S& x, const std::vector<S>& lambdas, const std::vector<S>& mus, const std::vector<S>& ws,
                           const std::vector<S>& vs);

// Root sets (lambda_1..lambda_l, mu_1..mu_m), each block sorted.
std::vector<std::vector<Complex>> solve_su3_bethe_numeric(const Su3ChainSpec& spec, int l, int m, std::uint64_t seed,
                                                          const NumericSolveOptions& opt = {});
double su3_bethe_residual_numeric(const std::vector<Complex>& lambdas, const std::vector<Complex>& mus, const Su3ChainSpec& spec);

// max |T(x)|Psi> - Lambda(x)|Psi>| with |Psi> scaled to unit sup norm.
double su3_transfer_check(const Rat& x, const std::vector<Complex>& lambdas, const std::vector<Complex>& mus, const Su3ChainSpec& spec);
// Exact version for rational roots, unscaled.
Rat su3_transfer_residual_exact(const Rat& x, const std::vector<Rat>& lambdas, const std::vector<Rat>& mus, const Su3ChainSpec& spec);

} // namespace sprod
