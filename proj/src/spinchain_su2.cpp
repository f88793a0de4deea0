#include "sprod/spinchain_su2.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sprod/dwpf.hpp"

namespace sprod {

Rat EigenfunctionSpec::operator()(const Rat& x) const {
    switch (kind) {
    case Kind::XXX_FUNDAMENTAL: {
        Rat r(1);
        for (const auto& w : points) r *= weight_f(x, w);
        return r;
    }
    case Kind::XXX_ANTI: {
        Rat r(1);
        for (const auto& v : points) r *= weight_f(v, x);
        return r;
    }
    case Kind::CONSTANT_TABLE: {
        auto it = table.find(x);
        if (it == table.end()) throw Error(ErrorKind::MalformedSpec, "constant table has no entry for " + x.str());
        return it->second;
    }
    case Kind::ONE: break;
    }
    return Rat(1);
}

Complex EigenfunctionSpec::operator()(const Complex& x) const {
    Complex r(1.0);
    switch (kind) {
    case Kind::XXX_FUNDAMENTAL:
        for (const auto& w : points) r *= weight_f(x, to_complex(w));
        break;
    case Kind::XXX_ANTI:
        for (const auto& v : points) r *= weight_f(to_complex(v), x);
        break;
    case Kind::CONSTANT_TABLE: throw Error(ErrorKind::MalformedSpec, "constant table in numeric evaluation");
    case Kind::ONE: break;
    }
    return r;
}

std::vector<Rat> eval_all(const EigenfunctionSpec& spec, const std::vector<Rat>& xs) {
    std::vector<Rat> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(spec(x));
    return out;
}

Operator su2_monodromy_entry(Su2Entry entry, const Rat& x, const std::vector<Rat>& ws) {
    auto t = su2_monodromy<Rat>(x, ws);
    return t[static_cast<int>(entry)];
}

template <class S>
SparseVec<S> bethe_state(const std::vector<S>& lambdas, const std::vector<S>& ws) {
    require_distinct(lambdas, "lambda");
    SparseVec<S> v = su2_vacuum<S>(ws.size());
    for (size_t i = lambdas.size(); i-- > 0;) v = act(su2_monodromy<S>(lambdas[i], ws)[1], v);
    return v;
}

template <class S>
SparseVec<S> dual_bethe_state(const std::vector<S>& lambdas, const std::vector<S>& ws) {
    require_distinct(lambdas, "lambda");
    SparseVec<S> v = su2_vacuum<S>(ws.size());
    for (const auto& l : lambdas) v = act_left(v, su2_monodromy<S>(l, ws)[2]);
    return v;
}

template SparseVec<Rat> bethe_state<Rat>(const std::vector<Rat>&, const std::vector<Rat>&);
template SparseVec<Rat> dual_bethe_state<Rat>(const std::vector<Rat>&, const std::vector<Rat>&);
template SparseVec<Complex> bethe_state<Complex>(const std::vector<Complex>&, const std::vector<Complex>&);
template SparseVec<Complex> dual_bethe_state<Complex>(const std::vector<Complex>&, const std::vector<Complex>&);

Rat su2_scalar_product_direct(const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB, const std::vector<Rat>& ws) {
    if (lambdaC.size() != lambdaB.size()) throw Error(ErrorKind::SizeMismatch, "|lambdaC| != |lambdaB|");
    return dot(dual_bethe_state(lambdaC, ws), bethe_state(lambdaB, ws));
}

std::vector<Rat> bethe_residual(const std::vector<Rat>& lambdas, const EigenfunctionSpec& a, const EigenfunctionSpec& d) {
    std::vector<Rat> res;
    for (const auto& li : lambdas) {
        Rat p(1);
        for (const auto& lj : lambdas) {
            Rat den = li - lj - Rat(1);
            if (den.is_zero()) throw Error(ErrorKind::PoleAtPoint, "lambda_i - lambda_j = 1");
            p *= (li - lj + Rat(1)) / den;
        }
        Rat dv = d(li);
        if (dv.is_zero()) throw Error(ErrorKind::PoleAtPoint, "d(lambda) = 0");
        res.push_back(a(li) / dv + p);
    }
    return res;
}

namespace detail {

bool solve_linear(std::vector<std::vector<Complex>> a, std::vector<Complex> b, std::vector<Complex>& x) {
    const size_t n = b.size();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        for (size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        if (std::abs(a[p][c]) < 1e-300) return false;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (size_t r = c + 1; r < n; ++r) {
            Complex m = a[r][c] / a[c][c];
            for (size_t k = c; k < n; ++k) a[r][k] -= m * a[c][k];
            b[r] -= m * b[c];
        }
    }
    x.assign(n, Complex(0));
    for (size_t i = n; i-- > 0;) {
        Complex s = b[i];
        for (size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
        x[i] = s / a[i][i];
    }
    return true;
}

} // namespace detail

namespace {

// Polynomial form of the Bethe system, free of the poles of r.
std::vector<Complex> bethe_poly(const std::vector<Complex>& l, const std::vector<Complex>& w) {
    std::vector<Complex> out(l.size());
    for (size_t i = 0; i < l.size(); ++i) {
        Complex p(1), q(1);
        for (const auto& wk : w) {
            p *= l[i] - wk + 1.0;
            q *= l[i] - wk;
        }
        for (size_t j = 0; j < l.size(); ++j) {
            if (j == i) continue;
            p *= l[i] - l[j] - 1.0;
            q *= l[i] - l[j] + 1.0;
        }
        out[i] = p - q;
    }
    return out;
}

} // namespace

namespace detail {
double max_abs(const std::vector<Complex>& v) {
    double m = 0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}
} // namespace detail

double bethe_residual_numeric(const std::vector<Complex>& roots, const std::vector<Rat>& ws) {
    double m = 0;
    for (const auto& li : roots) {
        Complex a(1), p(1);
        for (const auto& w : ws) a *= weight_f(li, to_complex(w));
        for (const auto& lj : roots) p *= (li - lj + 1.0) / (li - lj - 1.0);
        m = std::max(m, std::abs(a + p));
    }
    return m;
}

namespace detail {

bool less_root(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

std::vector<std::vector<Complex>> newton_multistart(const NewtonProblem& prob, std::uint64_t seed, const NumericSolveOptions& opt) {
    std::vector<std::vector<Complex>> found;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(prob.lo, prob.hi), im(-2.0, 2.0);
    for (int s = 0; s < opt.starts; ++s) {
        std::vector<Complex> l(static_cast<size_t>(prob.n));
        for (auto& z : l) z = Complex(re(rng), im(rng));
        bool ok = false;
        for (int it = 0; it < opt.max_iter; ++it) {
            std::vector<Complex> f = prob.system(l);
            std::vector<std::vector<Complex>> jac(l.size(), std::vector<Complex>(l.size()));
            for (size_t j = 0; j < l.size(); ++j) {
                double h = 1e-7 * (1.0 + std::abs(l[j]));
                auto lp = l, lm = l;
                lp[j] += h;
                lm[j] -= h;
                auto fp = prob.system(lp), fm = prob.system(lm);
                for (size_t i = 0; i < l.size(); ++i) jac[i][j] = (fp[i] - fm[i]) / (2.0 * h);
            }
            std::vector<Complex> step;
            for (auto& z : f) z = -z;
            if (!solve_linear(jac, f, step)) break;
            for (size_t i = 0; i < l.size(); ++i) l[i] += step[i];
            if (max_abs(step) < opt.tol * (1.0 + max_abs(l))) {
                ok = true;
                break;
            }
        }
        if (!ok || !prob.accept(l)) continue;
        prob.canonicalize(l);
        bool dup = false;
        for (const auto& g : found) {
            double d = 0;
            for (size_t i = 0; i < l.size(); ++i) d = std::max(d, std::abs(g[i] - l[i]));
            dup = dup || d < opt.dedup;
        }
        if (!dup) found.push_back(l);
    }
    if (found.empty()) throw Error(ErrorKind::NoConvergence, "no Bethe root after " + std::to_string(opt.starts) + " starts");
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), less_root);
    });
    return found;
}

} // namespace detail

std::vector<std::vector<Complex>> solve_bethe_numeric(const std::vector<Rat>& ws, int n, std::uint64_t seed,
                                                      const NumericSolveOptions& opt) {
    if (n < 0 || n > static_cast<int>(ws.size())) throw Error(ErrorKind::SizeError, "need 0 <= l <= L");
    if (n == 0) return {{}};
    std::vector<Complex> w;
    detail::NewtonProblem prob;
    prob.n = n;
    for (size_t i = 0; i < ws.size(); ++i) {
        w.push_back(to_complex(ws[i]));
        double d = ws[i].to_double();
        prob.lo = i ? std::min(prob.lo, d) : d;
        prob.hi = i ? std::max(prob.hi, d) : d;
    }
    prob.lo -= 3.0;
    prob.hi += 3.0;
    prob.system = [&](const std::vector<Complex>& l) { return bethe_poly(l, w); };
    prob.accept = [&](const std::vector<Complex>& l) {
        // reject collisions and points where the rational form is singular
        const double sep = 1e-6;
        for (size_t i = 0; i < l.size(); ++i) {
            for (const auto& wk : w)
                if (std::abs(l[i] - wk) < sep) return false;
            for (size_t j = 0; j < l.size(); ++j)
                if (j != i && (std::abs(l[i] - l[j]) < sep || std::abs(l[i] - l[j] - 1.0) < sep)) return false;
        }
        return bethe_residual_numeric(l, ws) <= 1e-10;
    };
    prob.canonicalize = [](std::vector<Complex>& l) { std::sort(l.begin(), l.end(), detail::less_root); };
    return detail::newton_multistart(prob, seed, opt);
}

template <class S>
static SparseVec<S> transfer_defect(const S& x, const std::vector<S>& roots, const std::vector<S>& ws, SparseVec<S>* psi_out) {
    SparseVec<S> psi = bethe_state(roots, ws);
    auto t = su2_monodromy<S>(x, ws);
    S a(1), lam_a(1), lam_d(1);
    for (const auto& w : ws) a *= weight_f(x, w);
    for (const auto& l : roots) {
        lam_a *= weight_f(l, x);
        lam_d *= weight_f(x, l);
    }
    S eig = a * lam_a + lam_d;
    SparseVec<S> out = act(t[0] + t[3], psi) + S(-1) * (eig * psi);
    if (psi_out) *psi_out = std::move(psi);
    return out;
}

double transfer_check(const Rat& x, const std::vector<Complex>& roots, const std::vector<Rat>& ws) {
    std::vector<Complex> cw;
    for (const auto& w : ws) cw.push_back(to_complex(w));
    SparseVec<Complex> psi;
    SparseVec<Complex> d = transfer_defect<Complex>(to_complex(x), roots, cw, &psi);
    double scale = norm_inf(psi);
    if (scale == 0.0) throw Error(ErrorKind::NoConvergence, "Bethe vector vanishes at these roots");
    return norm_inf(d) / scale;
}

Rat transfer_residual_exact(const Rat& x, const std::vector<Rat>& roots, const std::vector<Rat>& ws) {
    SparseVec<Rat> d = transfer_defect<Rat>(x, roots, ws, nullptr);
    Rat m(0);
    for (const auto& kv : d.entries) {
        Rat a = kv.second.sign() < 0 ? -kv.second : kv.second;
        if (a > m) m = a;
    }
    return m;
}

} // namespace sprod
