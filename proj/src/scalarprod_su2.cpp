#include "sprod/scalarprod_su2.hpp"

#include <bit>

#include "sprod/dwpf.hpp"
#include "sprod/parallel.hpp"

namespace sprod {

std::vector<PartitionSplit> enumerate_splits(int n) {
    if (n < 0 || n > 20) throw Error(ErrorKind::SizeError, "split enumeration supports 0..20 elements");
    std::vector<PartitionSplit> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        PartitionSplit s;
        s.mask = mask;
        for (int i = 0; i < n; ++i) (mask >> i & 1u ? s.part_I : s.part_II).push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::pair<PartitionSplit, PartitionSplit>> enumerate_paired_splits(int n) {
    auto all = enumerate_splits(n);
    std::vector<std::pair<PartitionSplit, PartitionSplit>> out;
    for (const auto& c : all)
        for (const auto& b : all)
            if (std::popcount(c.mask) == std::popcount(b.mask)) out.emplace_back(c, b);
    return out;
}

template <class S>
static S prod_of(const std::vector<S>& xs, const std::vector<int>& idx) {
    S r(1);
    for (int i : idx) r *= xs[static_cast<size_t>(i)];
    return r;
}

template <class S>
S sp_sum_values(const std::vector<S>& lambdaC, const std::vector<S>& lambdaB, const std::vector<S>& aC, const std::vector<S>& dC,
                const std::vector<S>& aB, const std::vector<S>& dB) {
    if (lambdaC.size() != lambdaB.size()) throw Error(ErrorKind::SizeMismatch, "|lambdaC| != |lambdaB|");
    const int n = static_cast<int>(lambdaC.size());
    auto pairs = enumerate_paired_splits(n);
    std::vector<S> terms(pairs.size());
    parallel_for(pairs.size(), [&](size_t k) {
        const auto& [c, b] = pairs[k];
        auto cI = pick(lambdaC, c.part_I), cII = pick(lambdaC, c.part_II);
        auto bI = pick(lambdaB, b.part_I), bII = pick(lambdaB, b.part_II);
        S t = prod_of(aB, b.part_I) * prod_of(aC, c.part_II) * prod_of(dB, b.part_II) * prod_of(dC, c.part_I);
        t *= f_set(cI, cII) * f_set(bII, bI);
        if (is_zero(t)) {
            terms[k] = S(0);
            return;
        }
        terms[k] = t * dwpf_izergin(bII, cII) * dwpf_izergin(cI, bI);
    });
    S sum(0);
    for (const auto& t : terms) sum += t;
    return sum;
}

Rat sp_sum(const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB, const EigenfunctionSpec& a, const EigenfunctionSpec& d) {
    return sp_sum_values(lambdaC, lambdaB, eval_all(a, lambdaC), eval_all(d, lambdaC), eval_all(a, lambdaB), eval_all(d, lambdaB));
}

Rat sp_sum_normalized(const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB, const EigenfunctionSpec& r) {
    std::vector<Rat> ones(lambdaC.size(), Rat(1));
    return sp_sum_values(lambdaC, lambdaB, eval_all(r, lambdaC), ones, eval_all(r, lambdaB), ones);
}

// -prod_j (x_i - x_j + 1)/(x_i - x_j - 1), the on-shell value of r at x_i
template <class S>
static std::vector<S> onshell_r(const std::vector<S>& xs) {
    std::vector<S> out;
    for (const auto& xi : xs) {
        S p(-1);
        for (const auto& xj : xs) {
            S den = xi - xj - S(1);
            if (is_zero(den)) throw Error(ErrorKind::PoleAtPoint, "two Bethe roots differ by 1");
            p *= (xi - xj + S(1)) / den;
        }
        out.push_back(p);
    }
    return out;
}

template <class S>
S slavnov_onshell_sum_values(const std::vector<S>& lambdaC, const std::vector<S>& lambdaB, const std::vector<S>& rC) {
    if (lambdaC.size() != lambdaB.size() || rC.size() != lambdaC.size()) throw Error(ErrorKind::SizeMismatch, "on-shell sum sizes");
    std::vector<S> ones(lambdaC.size(), S(1));
    return sp_sum_values(lambdaC, lambdaB, rC, ones, onshell_r(lambdaB), ones);
}

template <class S>
S slavnov_det_values(const std::vector<S>& lambdaC, const std::vector<S>& lambdaB, const std::vector<S>& rC) {
    const size_t n = lambdaC.size();
    if (lambdaB.size() != n || rC.size() != n) throw Error(ErrorKind::SizeMismatch, "Slavnov determinant sizes");
    require_distinct(lambdaC, "lambdaC");
    require_distinct(lambdaB, "lambdaB");
    Matrix<S> m(static_cast<int>(n), static_cast<int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            S p(1), q(1);
            for (size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                p *= lambdaB[k] - lambdaC[i] + S(1);
                q *= lambdaB[k] - lambdaC[i] - S(1);
            }
            S den = lambdaB[j] - lambdaC[i];
            if (is_zero(den)) throw Error(ErrorKind::PoleAtPoint, "lambdaB_j = lambdaC_i");
            m(i, j) = (p * rC[i] - q) / den;
        }
    // prod_{i<j} (lC_j - lC_i)(lB_i - lB_j)
    S vb = vandermonde(lambdaB);
    if ((n * (n - 1) / 2) % 2 == 1) vb = -vb;
    return det_exact(m) / (vandermonde(lambdaC) * vb);
}

template Rat sp_sum_values<Rat>(const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&,
                                const std::vector<Rat>&, const std::vector<Rat>&);
template RatFunc sp_sum_values<RatFunc>(const std::vector<RatFunc>&, const std::vector<RatFunc>&, const std::vector<RatFunc>&,
                                        const std::vector<RatFunc>&, const std::vector<RatFunc>&, const std::vector<RatFunc>&);
template Rat slavnov_onshell_sum_values<Rat>(const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&);
template RatFunc slavnov_onshell_sum_values<RatFunc>(const std::vector<RatFunc>&, const std::vector<RatFunc>&, const std::vector<RatFunc>&);
template Rat slavnov_det_values<Rat>(const std::vector<Rat>&, const std::vector<Rat>&, const std::vector<Rat>&);
template RatFunc slavnov_det_values<RatFunc>(const std::vector<RatFunc>&, const std::vector<RatFunc>&, const std::vector<RatFunc>&);

Rat slavnov_onshell_sum(const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB, const EigenfunctionSpec& rC) {
    return slavnov_onshell_sum_values(lambdaC, lambdaB, eval_all(rC, lambdaC));
}

Rat slavnov_det(const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB, const EigenfunctionSpec& rC) {
    return slavnov_det_values(lambdaC, lambdaB, eval_all(rC, lambdaC));
}

Rat sp_infinite_values(const std::vector<Rat>& lambdaC, const std::vector<Rat>& rC, InfiniteForm form) {
    const int n = static_cast<int>(lambdaC.size());
    if (rC.size() != lambdaC.size()) throw Error(ErrorKind::SizeMismatch, "one r value per lambdaC");
    require_distinct(lambdaC, "lambdaC");
    if (form == InfiniteForm::DET) {
        Matrix<Rat> m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = power(lambdaC[i], j) * rC[i] - power(lambdaC[i] + Rat(1), j);
        return det_exact(m) / vandermonde(lambdaC);
    }
    // (1/l!) sum_k sum_{|I| = l-k} C(l,k) prod r(II) f(I, II) k! (-1)^(l-k) (l-k)!
    Rat total(0);
    for (const auto& s : enumerate_splits(n)) {
        const int k = static_cast<int>(s.part_II.size());
        Rat t = prod_of(rC, s.part_II) * f_set(pick(lambdaC, s.part_I), pick(lambdaC, s.part_II));
        Rat binom = factorial(n) / (factorial(k) * factorial(n - k));
        t *= binom * factorial(k) * factorial(n - k);
        if ((n - k) % 2 == 1) t = -t;
        total += t;
    }
    return total / factorial(n);
}

Rat sp_infinite(const std::vector<Rat>& lambdaC, const EigenfunctionSpec& rC, InfiniteForm form) {
    return sp_infinite_values(lambdaC, eval_all(rC, lambdaC), form);
}

Rat sp_infinite_from_limit(const std::vector<Rat>& lambdaC, const std::vector<Rat>& rC) {
    const int n = static_cast<int>(lambdaC.size());
    std::vector<RatFunc> lc(lambdaC.begin(), lambdaC.end()), rc(rC.begin(), rC.end());
    Rat lim = sequential_limit(n, std::vector<int>(static_cast<size_t>(n), 1), [&](const std::vector<Rat>& outer) {
        // variable 0 is lB_l, variable i is lB_{l-i}
        std::vector<RatFunc> lb;
        for (int i = n - 1; i >= 1; --i) lb.push_back(RatFunc(outer[static_cast<size_t>(i - 1)]));
        if (n > 0) lb.push_back(RatFunc::var());
        return slavnov_onshell_sum_values(lc, lb, rc);
    });
    return lim / factorial(n);
}

} // namespace sprod
