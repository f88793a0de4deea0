#include "sprod/spinchain_su3.hpp"

#include <algorithm>
#include <array>

#include "sprod/dwpf.hpp"

namespace sprod {

Operator su3_monodromy_entry(int i, int j, const Rat& x, const Su3ChainSpec& spec) {
    if (i < 1 || i > 3 || j < 1 || j > 3) throw Error(ErrorKind::MalformedSpec, "monodromy indices are 1..3");
    if (spec.sites() > 4) throw Error(ErrorKind::SizeError, "chains are capped at 4 sites");
    return su3_monodromy<Rat>(x, spec.ws, spec.vs)[static_cast<size_t>((i - 1) * 3 + (j - 1))];
}

namespace {

template <class S>
using Block = std::array<std::array<SparseOp<S>, 2>, 2>;

template <class S>
Block<S> block_mul(const Block<S>& x, const Block<S>& y) {
    Block<S> z;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return z;
}

template <class S>
SparseOp<S> on_alpha(int k, int l, const SparseOp<S>& a, int dim_h) {
    SparseOp<S> m = SparseOp<S>::identity(dim_h);
    for (int j = 0; j < l; ++j) m = kron(m, j == k ? a : SparseOp<S>::identity(2));
    return m;
}

// Secondary monodromy on H x V_alpha: D R_l ... R_1 (ket) or R_l ... R_1 D (dual).
template <class S>
Block<S> secondary(const S& x, const std::vector<S>& lambdas, const std::vector<S>& ws, const std::vector<S>& vs, bool dual) {
    const int l = static_cast<int>(lambdas.size());
    auto t = su3_monodromy<S>(x, ws, vs);
    const int dim_h = t[0].dim, dim_a = 1 << l;
    Block<S> d;
    for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) d[b][c] = kron(t[static_cast<size_t>((b + 1) * 3 + c + 1)], SparseOp<S>::identity(dim_a));
    Block<S> p;
    bool have = false;
    for (int k = l - 1; k >= 0; --k) {
        std::vector<S> r = rmatrix_entries<S>(VertexKind::SU2NORMALIZED, x, lambdas[static_cast<size_t>(k)]);
        Block<S> blk;
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                SparseOp<S> a(2);
                for (int ao = 0; ao < 2; ++ao)
                    for (int ai = 0; ai < 2; ++ai) a.add(ao, ai, r[static_cast<size_t>(2 * b + ao) * 4 + 2 * c + ai]);
                blk[b][c] = on_alpha(k, l, a, dim_h);
            }
        p = have ? block_mul(p, blk) : blk;
        have = true;
    }
    if (!have) return d;
    return dual ? block_mul(p, d) : block_mul(d, p);
}

// Component a of a vector on H x V_alpha, as a vector on H.
template <class S>
SparseVec<S> alpha_component(const SparseVec<S>& v, int a, int dim_h, int dim_a) {
    SparseVec<S> out(dim_h);
    for (const auto& [i, x] : v.entries)
        if (i % dim_a == a) out.add(i / dim_a, x);
    return out;
}

template <class S>
void check_chain(const std::vector<S>& lambdas, const std::vector<S>& mus, const std::vector<S>& ws, const std::vector<S>& vs) {
    if (ws.size() + vs.size() > 4) throw Error(ErrorKind::SizeError, "chains are capped at 4 sites");
    require_distinct(lambdas, "lambda");
    require_distinct(mus, "mu");
}

} // namespace

template <class S>
SparseVec<S> nested_bethe_state(const std::vector<S>& lambdas, const std::vector<S>& mus, const std::vector<S>& ws,
                                const std::vector<S>& vs) {
    check_chain(lambdas, mus, ws, vs);
    const int l = static_cast<int>(lambdas.size()), dim_a = 1 << l;
    SparseVec<S> vac = su3_vacuum<S>(ws.size(), vs.size());
    const int dim_h = vac.dim;
    SparseVec<S> phi = kron(vac, SparseVec<S>::basis(dim_a, 0));
    for (size_t i = mus.size(); i-- > 0;) phi = act(secondary(mus[i], lambdas, ws, vs, false)[0][1], phi);
    std::vector<std::vector<SparseOp<S>>> ts;
    for (const auto& x : lambdas) ts.push_back(su3_monodromy<S>(x, ws, vs));
    SparseVec<S> out(dim_h);
    for (int a = 0; a < dim_a; ++a) {
        SparseVec<S> v = alpha_component(phi, a, dim_h, dim_a);
        for (int k = l - 1; k >= 0 && !v.is_zero(); --k) {
            int ak = (a >> (l - 1 - k)) & 1;
            v = act(ts[static_cast<size_t>(k)][static_cast<size_t>(ak + 1)], v);
        }
        out = out + v;
    }
    return out;
}

template <class S>
SparseVec<S> dual_nested_bethe_state(const std::vector<S>& lambdas, const std::vector<S>& mus, const std::vector<S>& ws,
                                     const std::vector<S>& vs) {
    check_chain(lambdas, mus, ws, vs);
    const int l = static_cast<int>(lambdas.size()), dim_a = 1 << l;
    SparseVec<S> vac = su3_vacuum<S>(ws.size(), vs.size());
    const int dim_h = vac.dim;
    SparseVec<S> phi = kron(vac, SparseVec<S>::basis(dim_a, 0));
    for (const auto& mu : mus) phi = act_left(phi, secondary(mu, lambdas, ws, vs, true)[1][0]);
    std::vector<std::vector<SparseOp<S>>> ts;
    for (const auto& x : lambdas) ts.push_back(su3_monodromy<S>(x, ws, vs));
    SparseVec<S> out(dim_h);
    for (int a = 0; a < dim_a; ++a) {
        SparseVec<S> v = alpha_component(phi, a, dim_h, dim_a);
        for (int k = 0; k < l && !v.is_zero(); ++k) {
            int ak = (a >> (l - 1 - k)) & 1;
            v = act_left(v, ts[static_cast<size_t>(k)][static_cast<size_t>((ak + 1) * 3)]);
        }
        out = out + v;
    }
    return out;
}

template SparseVec<Rat> nested_bethe_state<Rat>(const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&,
                                                const std::vector<Rat>&);
template SparseVec<Rat> dual_nested_bethe_state<Rat>(const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&,
                                                     const std::vector<Rat>&);
template SparseVec<Complex> nested_bethe_state<Complex>(const std::vector<Complex>&, const std::vector<Complex>&,
                                                        const std::vector<Complex>&, const std::vector<Complex>&);

Rat su3_scalar_product_direct(const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB,
                              const std::vector<Rat>& muB, const Su3ChainSpec& spec) {
    if (lambdaC.size() != lambdaB.size() || muC.size() != muB.size()) throw Error(ErrorKind::SizeMismatch, "C and B sets differ in size");
    Rat norm = f_set(muC, lambdaC) * f_set(muB, lambdaB);
    auto bra = dual_nested_bethe_state(lambdaC, muC, spec.ws, spec.vs);
    auto ket = nested_bethe_state(lambdaB, muB, spec.ws, spec.vs);
    return norm * dot(bra, ket);
}

std::pair<std::vector<Rat>, std::vector<Rat>> su3_bethe_residuals(const std::vector<Rat>& lambdas, const std::vector<Rat>& mus,
                                                                  const EigenfunctionSpec& r1, const EigenfunctionSpec& r2) {
    auto ratio = [](const Rat& a, const Rat& b) {
        Rat den = a - b - Rat(1);
        if (den.is_zero()) throw Error(ErrorKind::PoleAtPoint, "roots differ by 1");
        return (a - b + Rat(1)) / den;
    };
    std::vector<Rat> first, second;
    for (const auto& li : lambdas) {
        Rat p(1);
        for (const auto& lj : lambdas) p *= ratio(li, lj);
        for (const auto& mk : mus) p *= weight_f(mk, li);
        first.push_back(r1(li) + p);
    }
    for (const auto& mi : mus) {
        Rat p(1);
        for (const auto& mj : mus) p *= ratio(mi, mj);
        for (const auto& lk : lambdas) {
            Rat f = weight_f(mi, lk);
            if (f.is_zero()) throw Error(ErrorKind::PoleAtPoint, "f(mu, lambda) = 0");
            p /= f;
        }
        second.push_back(r2(mi) + p);
    }
    return {first, second};
}

template <class S>
S su3_transfer_eigenvalue(const S& x, const std::vector<S>& lambdas, const std::vector<S>& mus, const std::vector<S>& ws,
                          const std::vector<S>& vs) {
    S a1 = f_set(std::vector<S>{x}, ws), a3 = f_set(vs, std::vector<S>{x});
    std::vector<S> xs{x};
    return a1 * f_set(lambdas, xs) + f_set(mus, xs) * f_set(xs, lambdas) + a3 * f_set(xs, mus);
}

template <class S>
S su3_transfer_eigenvalue2(const S& x, const std::vector<S>& lambdas, const std::vector<S>& mus, const std::vector<S>& ws,
                           const std::vector<S>& vs) {
    (void)ws;
    std::vector<S> xs{x};
    S a3 = f_set(vs, xs);
    // prod 1/f(x, l) written as prod (x - l)/(x - l + 1), finite at x = l_i
    S inv(1);
    for (const auto& l : lambdas) {
        S den = x - l + S(1);
        if (is_zero(den)) throw Error(ErrorKind::PoleAtPoint, "f(x, lambda) = 0");
        inv *= (x - l) / den;
    }
    return f_set(mus, xs) + a3 * inv * f_set(xs, mus);
}

template Rat su3_transfer_eigenvalue<Rat>(const Rat&, const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&,
                                          const std::vector<Rat>&);
template Complex su3_transfer_eigenvalue<Complex>(const Complex&, const std::vector<Complex>&, const std::vector<Complex>&,
                                                  const std::vector<Complex>&, const std::vector<Complex>&);
template Rat su3_transfer_eigenvalue2<Rat>(const Rat&, const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&,
                                           const std::vector<Rat>&);

namespace {

std::vector<Complex> to_c(const std::vector<Rat>& xs) {
    std::vector<Complex> out;
    for (const auto& x : xs) out.push_back(to_complex(x));
    return out;
}

// Both nested systems with every denominator cleared.
std::vector<Complex> su3_bethe_poly(const std::vector<Complex>& z, int l, const std::vector<Complex>& w, const std::vector<Complex>& v) {
    std::vector<Complex> lam(z.begin(), z.begin() + l), mu(z.begin() + l, z.end());
    std::vector<Complex> out;
    for (size_t i = 0; i < lam.size(); ++i) {
        Complex p(1), q(1);
        for (const auto& wk : w) {
            p *= lam[i] - wk + 1.0;
            q *= lam[i] - wk;
        }
        for (size_t j = 0; j < lam.size(); ++j) {
            if (j == i) continue;
            p *= lam[i] - lam[j] - 1.0;
            q *= lam[i] - lam[j] + 1.0;
        }
        for (const auto& mk : mu) {
            p *= mk - lam[i];
            q *= mk - lam[i] + 1.0;
        }
        out.push_back(p - q);
    }
    for (size_t i = 0; i < mu.size(); ++i) {
        Complex p(1), q(1);
        for (const auto& vk : v) {
            p *= vk - mu[i];
            q *= vk - mu[i] + 1.0;
        }
        for (size_t j = 0; j < mu.size(); ++j) {
            if (j == i) continue;
            p *= mu[i] - mu[j] - 1.0;
            q *= mu[i] - mu[j] + 1.0;
        }
        for (const auto& lk : lam) {
            p *= mu[i] - lk + 1.0;
            q *= mu[i] - lk;
        }
        out.push_back(p - q);
    }
    return out;
}

} // namespace

double su3_bethe_residual_numeric(const std::vector<Complex>& lambdas, const std::vector<Complex>& mus, const Su3ChainSpec& spec) {
    double m = 0;
    auto w = to_c(spec.ws), v = to_c(spec.vs);
    for (const auto& li : lambdas) {
        Complex r1(1), p(1);
        for (const auto& wk : w) r1 *= weight_f(li, wk);
        for (const auto& lj : lambdas) p *= (li - lj + 1.0) / (li - lj - 1.0);
        for (const auto& mk : mus) p *= weight_f(mk, li);
        m = std::max(m, std::abs(r1 + p));
    }
    for (const auto& mi : mus) {
        Complex a3(1), p(1);
        for (const auto& vk : v) a3 *= weight_f(vk, mi);
        for (const auto& mj : mus) p *= (mi - mj + 1.0) / (mi - mj - 1.0);
        for (const auto& lk : lambdas) p /= weight_f(mi, lk);
        m = std::max(m, std::abs(1.0 / a3 + p));
    }
    return m;
}

std::vector<std::vector<Complex>> solve_su3_bethe_numeric(const Su3ChainSpec& spec, int l, int m, std::uint64_t seed,
                                                          const NumericSolveOptions& opt) {
    if (l < 0 || m < 0 || l + m == 0) throw Error(ErrorKind::SizeError, "need at least one root");
    auto w = to_c(spec.ws), v = to_c(spec.vs);
    detail::NewtonProblem prob;
    prob.n = l + m;
    bool first = true;
    for (const auto* set : {&spec.ws, &spec.vs})
        for (const auto& x : *set) {
            double d = x.to_double();
            prob.lo = first ? d : std::min(prob.lo, d);
            prob.hi = first ? d : std::max(prob.hi, d);
            first = false;
        }
    prob.lo -= 3.0;
    prob.hi += 3.0;
    prob.system = [&](const std::vector<Complex>& z) { return su3_bethe_poly(z, l, w, v); };
    prob.accept = [&](const std::vector<Complex>& z) {
        const double sep = 1e-6;
        std::vector<Complex> lam(z.begin(), z.begin() + l), mu(z.begin() + l, z.end());
        auto near = [&](Complex a, Complex b) { return std::abs(a - b) < sep; };
        for (size_t i = 0; i < lam.size(); ++i) {
            for (const auto& wk : w)
                if (near(lam[i], wk)) return false;
            for (size_t j = 0; j < lam.size(); ++j)
                if (j != i && (near(lam[i], lam[j]) || near(lam[i] - lam[j], 1.0))) return false;
            for (const auto& mk : mu)
                if (near(mk, lam[i]) || near(mk - lam[i], -1.0)) return false;
        }
        for (size_t i = 0; i < mu.size(); ++i) {
            for (const auto& vk : v)
                if (near(mu[i], vk) || near(vk - mu[i], -1.0)) return false;
            for (size_t j = 0; j < mu.size(); ++j)
                if (j != i && (near(mu[i], mu[j]) || near(mu[i] - mu[j], 1.0))) return false;
        }
        return su3_bethe_residual_numeric(lam, mu, spec) <= 1e-10;
    };
    prob.canonicalize = [l](std::vector<Complex>& z) {
        std::sort(z.begin(), z.begin() + l, detail::less_root);
        std::sort(z.begin() + l, z.end(), detail::less_root);
    };
    return detail::newton_multistart(prob, seed, opt);
}

template <class S>
static SparseVec<S> su3_defect(const S& x, const std::vector<S>& lambdas, const std::vector<S>& mus, const std::vector<S>& ws,
                               const std::vector<S>& vs, SparseVec<S>* psi_out) {
    SparseVec<S> psi = nested_bethe_state(lambdas, mus, ws, vs);
    auto t = su3_monodromy<S>(x, ws, vs);
    S eig = su3_transfer_eigenvalue(x, lambdas, mus, ws, vs);
    SparseVec<S> out = act(t[0] + t[4] + t[8], psi) + S(-1) * (eig * psi);
    if (psi_out) *psi_out = std::move(psi);
    return out;
}

double su3_transfer_check(const Rat& x, const std::vector<Complex>& lambdas, const std::vector<Complex>& mus, const Su3ChainSpec& spec) {
    SparseVec<Complex> psi;
    auto d = su3_defect<Complex>(to_complex(x), lambdas, mus, to_c(spec.ws), to_c(spec.vs), &psi);
    double scale = norm_inf(psi);
    if (scale == 0.0) throw Error(ErrorKind::NoConvergence, "nested Bethe vector vanishes at these roots");
    return norm_inf(d) / scale;
}

Rat su3_transfer_residual_exact(const Rat& x, const std::vector<Rat>& lambdas, const std::vector<Rat>& mus, const Su3ChainSpec& spec) {
    auto d = su3_defect<Rat>(x, lambdas, mus, spec.ws, spec.vs, nullptr);
    Rat m(0);
    for (const auto& kv : d.entries) {
        Rat a = kv.second.sign() < 0 ? -kv.second : kv.second;
        if (a > m) m = a;
    }
    return m;
}

} // namespace sprod
