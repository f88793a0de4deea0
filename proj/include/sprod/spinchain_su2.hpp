#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "sprod/sparse.hpp"

namespace sprod {

// Pseudo-vacuum eigenvalue of a diagonal monodromy entry, or a ratio of two.
struct EigenfunctionSpec {
    enum class Kind {
        XXX_FUNDAMENTAL, // prod_i f(x, w_i)
        XXX_ANTI,        // prod_j f(v_j, x)
        CONSTANT_TABLE,  // free constants keyed by exact argument
        ONE
    };
    Kind kind = Kind::ONE;
    std::vector<Rat> points;
    std::map<Rat, Rat> table;

    static EigenfunctionSpec one() { return {}; }
    static EigenfunctionSpec xxx(std::vector<Rat> ws) { return {Kind::XXX_FUNDAMENTAL, std::move(ws), {}}; }
    static EigenfunctionSpec xxx_anti(std::vector<Rat> vs) { return {Kind::XXX_ANTI, std::move(vs), {}}; }
    static EigenfunctionSpec constants(std::map<Rat, Rat> t) { return {Kind::CONSTANT_TABLE, {}, std::move(t)}; }

    Rat operator()(const Rat& x) const;
    // Numeric path; constant tables are not available here.
    Complex operator()(const Complex& x) const;
};

// Values of spec at each point, in order.
std::vector<Rat> eval_all(const EigenfunctionSpec& spec, const std::vector<Rat>& xs);

enum class Su2Entry { A, B, C, D };

template <class S>
std::vector<SparseOp<S>> su2_monodromy(const S& x, const std::vector<S>& ws) {
    return chain_monodromy<S>(x, std::vector<VertexKind>(ws.size(), VertexKind::SU2), ws);
}

Operator su2_monodromy_entry(Su2Entry entry, const Rat& x, const std::vector<Rat>& ws);

// All sites in state 1.
template <class S>
SparseVec<S> su2_vacuum(size_t sites) {
    int dim = 1;
    for (size_t i = 0; i < sites; ++i) dim *= 2;
    return SparseVec<S>::basis(dim, 0);
}

// B(l_1)...B(l_n)|0>
template <class S>
SparseVec<S> bethe_state(const std::vector<S>& lambdas, const std::vector<S>& ws);
// <0|C(l_1)...C(l_n)
template <class S>
SparseVec<S> dual_bethe_state(const std::vector<S>& lambdas, const std::vector<S>& ws);

// <0| prod C(lC) prod B(lB) |0> by explicit operator application.
Rat su2_scalar_product_direct(const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB, const std::vector<Rat>& ws);

// r(l_i) + prod_j (l_i - l_j + 1)/(l_i - l_j - 1), with r = a/d.
std::vector<Rat> bethe_residual(const std::vector<Rat>& lambdas, const EigenfunctionSpec& a, const EigenfunctionSpec& d);

struct NumericSolveOptions {
    int starts = 200;
    int max_iter = 100;
    double tol = 1e-13;
    double dedup = 1e-8;
};

// Distinct on-shell root sets for a(x) = prod f(x, w_i), d = 1, sorted.
std::vector<std::vector<Complex>> solve_bethe_numeric(const std::vector<Rat>& ws, int n, std::uint64_t seed,
                                                      const NumericSolveOptions& opt = {});

// max |(A(x)+D(x))|Psi> - Lambda(x)|Psi>| with |Psi> scaled to unit sup norm.
double transfer_check(const Rat& x, const std::vector<Complex>& roots, const std::vector<Rat>& ws);
// Same in exact arithmetic, for rational roots (returns the unscaled residual).
Rat transfer_residual_exact(const Rat& x, const std::vector<Rat>& roots, const std::vector<Rat>& ws);

// Rational residual of the Bethe system at complex roots (max abs).
double bethe_residual_numeric(const std::vector<Complex>& roots, const std::vector<Rat>& ws);

namespace detail {
// Solve a small dense complex system in place; false if singular.
bool solve_linear(std::vector<std::vector<Complex>> a, std::vector<Complex> b, std::vector<Complex>& x);
double max_abs(const std::vector<Complex>& v);
bool less_root(const Complex& a, const Complex& b);

struct NewtonProblem {
    int n = 0;
    double lo = -3, hi = 3; // real range of the random starts
    std::function<std::vector<Complex>(const std::vector<Complex>&)> system;
    std::function<bool(const std::vector<Complex>&)> accept;
    std::function<void(std::vector<Complex>&)> canonicalize;
};

// Seeded multi-start Newton with finite-difference Jacobian; distinct accepted
// roots, sorted. Throws NoConvergence if none.
std::vector<std::vector<Complex>> newton_multistart(const NewtonProblem& prob, std::uint64_t seed, const NumericSolveOptions& opt);
} // namespace detail

} // namespace sprod
