#include "sprod/scalarprod_su3.hpp"

#include <bit>

#include "sprod/dwpf.hpp"
#include "sprod/parallel.hpp"

namespace sprod {

namespace {

template <class S>
std::vector<S> concat(std::vector<S> a, const std::vector<S>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

template <class S>
S prod_at(const std::vector<S>& xs, const std::vector<int>& idx) {
    S r(1);
    for (int i : idx) r *= xs[static_cast<size_t>(i)];
    return r;
}

template <class S>
std::vector<S> lift(const std::vector<Rat>& xs) {
    return std::vector<S>(xs.begin(), xs.end());
}

void need(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::SizeMismatch, what);
}

} // namespace

Rat z_su3_oracle(const std::vector<Rat>& lambdas, const std::vector<Rat>& mus, const std::vector<Rat>& ws, const std::vector<Rat>& vs) {
    need(lambdas.size() == ws.size() && mus.size() == vs.size(), "need |lambda| = |w| and |mu| = |v|");
    return contract_lattice(su3_lattice(lambdas, mus, ws, vs));
}

template <class S>
S k_coefficient(const std::vector<S>& lI, const std::vector<S>& lII, const std::vector<S>& muI, const std::vector<S>& muII) {
    need(lII.size() == muII.size(), "K needs |lII| = |muII|");
    S k = f_set(muI, muII) * f_set(lII, lI) * f_set(muI, lI);
    if (is_zero(k)) return k;
    return k * dwpf_izergin(lII, muII);
}

template <class S>
S z_su3_sum(const std::vector<S>& lambdas, const std::vector<S>& mus, const std::vector<S>& ws, const std::vector<S>& vs) {
    need(lambdas.size() == ws.size() && mus.size() == vs.size(), "need |lambda| = |w| and |mu| = |v|");
    auto ls = enumerate_splits(static_cast<int>(lambdas.size()));
    auto ms = enumerate_splits(static_cast<int>(mus.size()));
    S sum(0);
    for (const auto& a : ls)
        for (const auto& b : ms) {
            if (a.part_II.size() != b.part_II.size()) continue;
            auto lI = pick(lambdas, a.part_I), lII = pick(lambdas, a.part_II);
            auto muI = pick(mus, b.part_I), muII = pick(mus, b.part_II);
            S k = k_coefficient(lI, lII, muI, muII);
            if (is_zero(k)) continue;
            sum += k * dwpf_izergin(concat(lI, muII), ws) * dwpf_izergin(vs, concat(muI, lII));
        }
    return sum;
}

template Rat k_coefficient<Rat>(const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&);
template RatFunc k_coefficient<RatFunc>(const std::vector<RatFunc>&, const std::vector<RatFunc>&, const std::vector<RatFunc>&,
                                        const std::vector<RatFunc>&);
template Rat z_su3_sum<Rat>(const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&);
template RatFunc z_su3_sum<RatFunc>(const std::vector<RatFunc>&, const std::vector<RatFunc>&, const std::vector<RatFunc>&,
                                    const std::vector<RatFunc>&);

SplitCensus su3_split_census(int l, int m) {
    SplitCensus c;
    for (const auto& a : enumerate_splits(l))
        for (const auto& b : enumerate_splits(m)) (a.part_II.size() == b.part_II.size() ? c.kept : c.skipped)++;
    return c;
}

const char* zlimit_name(ZLimit which) {
    switch (which) {
    case ZLimit::MU_INF: return "MU_INF";
    case ZLimit::LAMBDA_INF: return "LAMBDA_INF";
    case ZLimit::V_INF: return "V_INF";
    case ZLimit::W_INF: return "W_INF";
    }
    return "?";
}

namespace {

struct LimitSets {
    const std::vector<Rat>* lambdas = nullptr;
    const std::vector<Rat>* mus = nullptr;
    const std::vector<Rat>* ws = nullptr;
    const std::vector<Rat>* vs = nullptr;
    int k = 0; // size of the set sent away
};

LimitSets limit_sets(ZLimit which, const std::vector<Rat>& a, const std::vector<Rat>& b, const std::vector<Rat>& c, int l, int m) {
    LimitSets s;
    switch (which) {
    case ZLimit::MU_INF: s = {&a, nullptr, &b, &c, m}; break;
    case ZLimit::LAMBDA_INF: s = {nullptr, &a, &b, &c, l}; break;
    case ZLimit::V_INF: s = {&a, &b, &c, nullptr, m}; break;
    case ZLimit::W_INF: s = {&a, &b, nullptr, &c, l}; break;
    }
    auto size_is = [](const std::vector<Rat>* v, int n) { return v == nullptr || static_cast<int>(v->size()) == n; };
    need(size_is(s.lambdas, l) && size_is(s.mus, m) && size_is(s.ws, l) && size_is(s.vs, m), "limit sets do not match (l, m)");
    return s;
}

} // namespace

Rat z_su3_limit(ZLimit which, const std::vector<Rat>& a, const std::vector<Rat>& b, const std::vector<Rat>& c, int l, int m) {
    auto s = limit_sets(which, a, b, c, l, m);
    switch (which) {
    case ZLimit::MU_INF: return (m % 2 ? Rat(-1) : Rat(1)) * dwpf_izergin(*s.lambdas, *s.ws);
    case ZLimit::LAMBDA_INF: return dwpf_izergin(*s.vs, *s.mus);
    case ZLimit::V_INF: return f_set(*s.mus, *s.ws) * dwpf_izergin(*s.lambdas, *s.ws);
    case ZLimit::W_INF: return (l % 2 ? Rat(-1) : Rat(1)) * f_set(*s.vs, *s.lambdas) * dwpf_izergin(*s.vs, *s.mus);
    }
    return Rat(0);
}

Rat z_su3_limit_from_sum(ZLimit which, const std::vector<Rat>& a, const std::vector<Rat>& b, const std::vector<Rat>& c, int l, int m,
                         bool highest_first) {
    auto s = limit_sets(which, a, b, c, l, m);
    const int k = s.k;
    auto build = [&](const std::vector<Rat>& outer) {
        std::vector<RatFunc> sent(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
            // variable t sits at index k-1-t (highest first) or t
            int t = highest_first ? k - 1 - i : i;
            sent[static_cast<size_t>(i)] = t == 0 ? RatFunc::var() : RatFunc(outer[static_cast<size_t>(t - 1)]);
        }
        auto pick_set = [&](const std::vector<Rat>* v) { return v ? lift<RatFunc>(*v) : sent; };
        return z_su3_sum(pick_set(s.lambdas), pick_set(s.mus), pick_set(s.ws), pick_set(s.vs));
    };
    if (k == 0) {
        RatFunc z = build({});
        return ratfunc_eval(z, Rat(0));
    }
    return sequential_limit(k, std::vector<int>(static_cast<size_t>(k), 1), build) / factorial(k);
}

std::pair<Rat, Rat> lemma1_check(const std::vector<Rat>& lambdas, const std::vector<Rat>& mus, const std::vector<Rat>& ws) {
    need(lambdas.size() == ws.size(), "need |lambda| = |w|");
    Rat lhs = f_set(mus, ws) * dwpf_izergin(lambdas, ws);
    Rat rhs(0);
    for (const auto& a : enumerate_splits(static_cast<int>(lambdas.size())))
        for (const auto& b : enumerate_splits(static_cast<int>(mus.size()))) {
            if (a.part_II.size() != b.part_II.size()) continue;
            auto lI = pick(lambdas, a.part_I), lII = pick(lambdas, a.part_II);
            auto muI = pick(mus, b.part_I), muII = pick(mus, b.part_II);
            Rat k = k_coefficient(lI, lII, muI, muII);
            if (!k.is_zero()) rhs += k * dwpf_izergin(concat(lI, muII), ws);
        }
    return {lhs, rhs};
}

template <class S>
S su3_sp_sum_values(const std::vector<S>& muC, const std::vector<S>& lambdaC, const std::vector<S>& lambdaB, const std::vector<S>& muB,
                    const Su3Weights<S>& wt) {
    const size_t l = lambdaC.size(), m = muC.size();
    need(lambdaB.size() == l && muB.size() == m, "C and B sets differ in size");
    need(wt.a1C.size() == l && wt.a2C_l.size() == l && wt.a1B.size() == l && wt.a2B_l.size() == l, "lambda weights");
    need(wt.a2C_m.size() == m && wt.a3C.size() == m && wt.a2B_m.size() == m && wt.a3B.size() == m, "mu weights");
    auto lp = enumerate_paired_splits(static_cast<int>(l));
    auto mp = enumerate_paired_splits(static_cast<int>(m));
    std::vector<S> terms(lp.size() * mp.size());
    parallel_for(terms.size(), [&](size_t idx) {
        const auto& [lc, lb] = lp[idx / mp.size()];
        const auto& [mc, mb] = mp[idx % mp.size()];
        S t = prod_at(wt.a1B, lb.part_I) * prod_at(wt.a1C, lc.part_II) * prod_at(wt.a2B_l, lb.part_II) * prod_at(wt.a2C_l, lc.part_I) *
              prod_at(wt.a2B_m, mb.part_II) * prod_at(wt.a2C_m, mc.part_I) * prod_at(wt.a3B, mb.part_I) * prod_at(wt.a3C, mc.part_II);
        if (is_zero(t)) {
            terms[idx] = S(0);
            return;
        }
        auto lCI = pick(lambdaC, lc.part_I), lCII = pick(lambdaC, lc.part_II);
        auto lBI = pick(lambdaB, lb.part_I), lBII = pick(lambdaB, lb.part_II);
        auto mCI = pick(muC, mc.part_I), mCII = pick(muC, mc.part_II);
        auto mBI = pick(muB, mb.part_I), mBII = pick(muB, mb.part_II);
        t *= f_set(lCI, lCII) * f_set(lBII, lBI) * f_set(mCII, mCI) * f_set(mBI, mBII) * f_set(mBII, lBII) * f_set(mCI, lCI);
        if (is_zero(t)) {
            terms[idx] = S(0);
            return;
        }
        terms[idx] = t * z_su3_sum(lBII, mCI, lCII, mBI) * z_su3_sum(lCI, mBII, lBI, mCII);
    });
    S sum(0);
    for (const auto& t : terms) sum += t;
    return sum;
}

template Rat su3_sp_sum_values<Rat>(const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&,
                                    const Su3Weights<Rat>&);
template RatFunc su3_sp_sum_values<RatFunc>(const std::vector<RatFunc>&, const std::vector<RatFunc>&, const std::vector<RatFunc>&,
                                            const std::vector<RatFunc>&, const Su3Weights<RatFunc>&);

Rat su3_sp_sum(const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB, const std::vector<Rat>& muB,
               const EigenfunctionSpec& a1, const EigenfunctionSpec& a2, const EigenfunctionSpec& a3) {
    Su3Weights<Rat> wt{eval_all(a1, lambdaC), eval_all(a2, lambdaC), eval_all(a1, lambdaB), eval_all(a2, lambdaB),
                       eval_all(a2, muC),     eval_all(a3, muC),     eval_all(a2, muB),     eval_all(a3, muB)};
    return su3_sp_sum_values(muC, lambdaC, lambdaB, muB, wt);
}

Rat su3_sp_sum_normalized(const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB,
                          const std::vector<Rat>& muB, const EigenfunctionSpec& r1, const EigenfunctionSpec& r2) {
    std::vector<Rat> onesL(lambdaC.size(), Rat(1)), onesM(muC.size(), Rat(1));
    Su3Weights<Rat> wt{eval_all(r1, lambdaC), onesL, eval_all(r1, lambdaB), onesL, eval_all(r2, muC), onesM, eval_all(r2, muB), onesM};
    return su3_sp_sum_values(muC, lambdaC, lambdaB, muB, wt);
}

namespace {

// -prod_j (x_i - x_j + 1)/(x_i - x_j - 1)
template <class S>
S bethe_ratio(const std::vector<S>& xs, size_t i) {
    S p(-1);
    for (const auto& xj : xs) {
        S den = xs[i] - xj - S(1);
        if (is_zero(den)) throw Error(ErrorKind::PoleAtPoint, "two Bethe roots differ by 1");
        p *= (xs[i] - xj + S(1)) / den;
    }
    return p;
}

} // namespace

template <class S>
S su3_sp_onshell_sum(const std::vector<S>& muC, const std::vector<S>& lambdaC, const std::vector<S>& lambdaB, const std::vector<S>& muB,
                     const std::vector<S>& r1C, const std::vector<S>& r2C) {
    need(r1C.size() == lambdaC.size() && r2C.size() == muC.size(), "one free constant per C rapidity");
    std::vector<S> r1B, r2B;
    for (size_t i = 0; i < lambdaB.size(); ++i) {
        S p = bethe_ratio(lambdaB, i);
        for (const auto& mk : muB) p *= weight_f(mk, lambdaB[i]);
        r1B.push_back(p);
    }
    for (size_t i = 0; i < muB.size(); ++i) {
        S p = bethe_ratio(muB, i);
        for (const auto& lk : lambdaB) {
            S f = weight_f(muB[i], lk);
            if (is_zero(f)) throw Error(ErrorKind::PoleAtPoint, "f(muB, lambdaB) = 0");
            p /= f;
        }
        r2B.push_back(p);
    }
    std::vector<S> onesL(lambdaC.size(), S(1)), onesM(muC.size(), S(1));
    Su3Weights<S> wt{r1C, onesL, r1B, onesL, r2C, onesM, r2B, onesM};
    return su3_sp_sum_values(muC, lambdaC, lambdaB, muB, wt);
}

template Rat su3_sp_onshell_sum<Rat>(const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&,
                                     const std::vector<Rat>&, const std::vector<Rat>&);
template RatFunc su3_sp_onshell_sum<RatFunc>(const std::vector<RatFunc>&, const std::vector<RatFunc>&, const std::vector<RatFunc>&,
                                             const std::vector<RatFunc>&, const std::vector<RatFunc>&, const std::vector<RatFunc>&);

namespace {

// det[x_i^j a_i - (x_i + 1)^j b_i] / prod_{i<j} (x_j - x_i), j = 0..n-1
Rat infinite_det(const std::vector<Rat>& xs, const std::vector<Rat>& a, const std::vector<Rat>& b) {
    const int n = static_cast<int>(xs.size());
    require_distinct(xs, "rapidities");
    Matrix<Rat> mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mat(i, j) = power(xs[i], j) * a[i] - power(xs[i] + Rat(1), j) * b[i];
    return det_exact(mat) / vandermonde(xs);
}

// sum over splits (-1)^{|II|} prod_{I} a f(II, I), the sum form of infinite_det with b = 1
Rat infinite_sum(const std::vector<Rat>& xs, const std::vector<Rat>& a) {
    Rat total(0);
    for (const auto& s : enumerate_splits(static_cast<int>(xs.size()))) {
        Rat t = prod_at(a, s.part_I) * f_set(pick(xs, s.part_II), pick(xs, s.part_I));
        total += s.part_II.size() % 2 ? -t : t;
    }
    return total;
}

// prod_k f(x_i, ys_k) per i (row_first) or prod_k f(ys_k, x_i)
std::vector<Rat> f_against(const std::vector<Rat>& xs, const std::vector<Rat>& ys, bool row_first) {
    std::vector<Rat> out;
    for (const auto& x : xs) {
        Rat p(1);
        for (const auto& y : ys) p *= row_first ? weight_f(x, y) : weight_f(y, x);
        out.push_back(p);
    }
    return out;
}

std::vector<Rat> times(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out;
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
    return out;
}

void check_factor_sizes(FactorLimit limit, const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC, const std::vector<Rat>& survivingB,
                        const std::vector<Rat>& r1C, const std::vector<Rat>& r2C) {
    need(r1C.size() == lambdaC.size() && r2C.size() == muC.size(), "one free constant per C rapidity");
    need(survivingB.size() == (limit == FactorLimit::MUB_INF ? lambdaC.size() : muC.size()), "surviving B set size");
}

} // namespace

Rat su3_sp_factorized(FactorLimit limit, const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC, const std::vector<Rat>& survivingB,
                      const std::vector<Rat>& r1C, const std::vector<Rat>& r2C) {
    check_factor_sizes(limit, muC, lambdaC, survivingB, r1C, r2C);
    if (limit == FactorLimit::MUB_INF) {
        std::vector<Rat> ones(muC.size(), Rat(1));
        return infinite_det(muC, times(r2C, f_against(muC, lambdaC, true)), ones) * slavnov_det_values(lambdaC, survivingB, r1C);
    }
    return infinite_det(lambdaC, r1C, f_against(lambdaC, muC, false)) * slavnov_det_values(muC, survivingB, r2C);
}

Rat su3_sp_factorized_sum(FactorLimit limit, const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC, const std::vector<Rat>& survivingB,
                          const std::vector<Rat>& r1C, const std::vector<Rat>& r2C) {
    check_factor_sizes(limit, muC, lambdaC, survivingB, r1C, r2C);
    if (limit == FactorLimit::MUB_INF)
        return infinite_sum(muC, times(r2C, f_against(muC, lambdaC, true))) * slavnov_onshell_sum_values(lambdaC, survivingB, r1C);
    // f(muC, lC) times the lambda sum with r1 / prod f(muC, lC_i) in place of r1
    std::vector<Rat> scaled;
    auto fl = f_against(lambdaC, muC, false);
    for (size_t i = 0; i < r1C.size(); ++i) {
        if (fl[i].is_zero()) throw Error(ErrorKind::PoleAtPoint, "f(muC, lambdaC) = 0");
        scaled.push_back(r1C[i] / fl[i]);
    }
    return f_set(muC, lambdaC) * infinite_sum(lambdaC, scaled) * slavnov_onshell_sum_values(muC, survivingB, r2C);
}

Rat su3_sp_factorized_from_limit(FactorLimit limit, const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC,
                                 const std::vector<Rat>& survivingB, const std::vector<Rat>& r1C, const std::vector<Rat>& r2C) {
    check_factor_sizes(limit, muC, lambdaC, survivingB, r1C, r2C);
    const bool mu_away = limit == FactorLimit::MUB_INF;
    const int k = static_cast<int>(mu_away ? muC.size() : lambdaC.size());
    auto mc = lift<RatFunc>(muC), lc = lift<RatFunc>(lambdaC), sb = lift<RatFunc>(survivingB);
    auto r1 = lift<RatFunc>(r1C), r2 = lift<RatFunc>(r2C);
    auto build = [&](const std::vector<Rat>& outer) {
        // variable 0 is the highest index, variable t is index k-1-t
        std::vector<RatFunc> sent;
        for (int i = 0; i < k; ++i) {
            int t = k - 1 - i;
            sent.push_back(t == 0 ? RatFunc::var() : RatFunc(outer[static_cast<size_t>(t - 1)]));
        }
        return mu_away ? su3_sp_onshell_sum(mc, lc, sb, sent, r1, r2) : su3_sp_onshell_sum(mc, lc, sent, sb, r1, r2);
    };
    if (k == 0) return ratfunc_eval(build({}), Rat(0));
    return sequential_limit(k, std::vector<int>(static_cast<size_t>(k), 1), build) / factorial(k);
}

Rat staggered_double_limit(StaggerOrder order, const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC, const std::vector<Rat>& r1C,
                           const std::vector<Rat>& r2C) {
    const int l = static_cast<int>(lambdaC.size()), m = static_cast<int>(muC.size());
    need(r1C.size() == lambdaC.size() && r2C.size() == muC.size(), "one free constant per C rapidity");
    const RatFunc x = RatFunc::var();
    std::vector<RatFunc> lb, mb;
    RatFunc scale(1);
    // lambdaB_i = x^i, muB_j = x^{l+j}; or lambdaB_i = x^{m+i}, muB_j = x^j
    for (int i = 1; i <= l; ++i) lb.push_back(power(x, order == StaggerOrder::LAMBDA_THEN_MU ? i : m + i));
    for (int j = 1; j <= m; ++j) mb.push_back(power(x, order == StaggerOrder::LAMBDA_THEN_MU ? l + j : j));
    for (const auto& y : lb) scale *= y;
    for (const auto& y : mb) scale *= y;
    RatFunc s = su3_sp_onshell_sum(lift<RatFunc>(muC), lift<RatFunc>(lambdaC), lb, mb, lift<RatFunc>(r1C), lift<RatFunc>(r2C));
    return ratfunc_limit(scale * s, 0) / (factorial(l) * factorial(m));
}

Rat staggered_closed_form(StaggerOrder order, const std::vector<Rat>& muC, const std::vector<Rat>& lambdaC, const std::vector<Rat>& r1C,
                          const std::vector<Rat>& r2C) {
    need(r1C.size() == lambdaC.size() && r2C.size() == muC.size(), "one free constant per C rapidity");
    std::vector<Rat> onesL(lambdaC.size(), Rat(1)), onesM(muC.size(), Rat(1));
    if (order == StaggerOrder::LAMBDA_THEN_MU)
        return infinite_det(lambdaC, r1C, onesL) * infinite_det(muC, times(r2C, f_against(muC, lambdaC, true)), onesM);
    return infinite_det(muC, r2C, onesM) * infinite_det(lambdaC, r1C, f_against(lambdaC, muC, false));
}

} // namespace sprod
