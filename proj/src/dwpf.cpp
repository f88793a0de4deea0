#include "sprod/dwpf.hpp"

namespace sprod {

template <class S>
void require_distinct(const std::vector<S>& xs, const char* what) {
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j])
                throw Error(ErrorKind::DuplicateRapidity, std::string("repeated entry in ") + what);
}

template <class S>
S vandermonde(const std::vector<S>& xs) {
    S r(1);
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) r *= xs[j] - xs[i];
    return r;
}

template <class S>
static S izergin_entry(const S& l, const std::vector<S>& ws, size_t j) {
    S p(1);
    for (size_t k = 0; k < ws.size(); ++k)
        if (k != j) p *= l - ws[k] + S(1);
    S d = l - ws[j];
    if (is_zero(d)) throw Error(ErrorKind::PoleAtPoint, "lambda_i = w_j");
    return p / d;
}

template <class S>
S dwpf_izergin(const std::vector<S>& lambdas, const std::vector<S>& ws) {
    if (lambdas.size() != ws.size()) throw Error(ErrorKind::SizeMismatch, "Z(lambda|w) needs |lambda| = |w|");
    return pdwpf_izergin(lambdas, ws);
}

template <class S>
S dwpf_kostov(const std::vector<S>& lambdas, const std::vector<S>& ws) {
    if (lambdas.size() != ws.size()) throw Error(ErrorKind::SizeMismatch, "Z(lambda|w) needs |lambda| = |w|");
    return pdwpf_kostov(lambdas, ws);
}

template <class S>
S pdwpf_izergin(const std::vector<S>& lambdas, const std::vector<S>& ws) {
    const size_t n = lambdas.size(), l = ws.size();
    if (n > l) throw Error(ErrorKind::SizeError, "more lambdas than w");
    require_distinct(lambdas, "lambda");
    require_distinct(ws, "w");
    if (l == 0) return S(1);
    Matrix<S> m(static_cast<int>(l), static_cast<int>(l));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < l; ++j) m(i, j) = izergin_entry(lambdas[i], ws, j);
    for (size_t r = 0; r < l - n; ++r)
        for (size_t j = 0; j < l; ++j) m(n + r, j) = power(ws[j], static_cast<int>(l - n - 1 - r));
    // prod_{i<j} (w_i - w_j) = (-1)^{l(l-1)/2} vandermonde(w)
    S wv = vandermonde(ws);
    if ((l * (l - 1) / 2) % 2 == 1) wv = -wv;
    return det_exact(m) / (vandermonde(lambdas) * wv);
}

template <class S>
S pdwpf_kostov(const std::vector<S>& lambdas, const std::vector<S>& ws) {
    const size_t n = lambdas.size();
    if (n > ws.size()) throw Error(ErrorKind::SizeError, "more lambdas than w");
    require_distinct(lambdas, "lambda");
    require_distinct(ws, "w");
    Matrix<S> m(static_cast<int>(n), static_cast<int>(n));
    for (size_t i = 0; i < n; ++i) {
        S a(1);
        for (const auto& w : ws) a *= weight_f(lambdas[i], w);
        for (size_t j = 0; j < n; ++j)
            m(i, j) = power(lambdas[i], static_cast<int>(j)) * a - power(lambdas[i] + S(1), static_cast<int>(j));
    }
    return det_exact(m) / vandermonde(lambdas);
}

Rat pdwpf(const std::vector<Rat>& lambdas, const std::vector<Rat>& ws, PdwpfFormula formula) {
    if (lambdas.size() >= ws.size()) throw Error(ErrorKind::SizeError, "partial DWPF needs n < l");
    switch (formula) {
    case PdwpfFormula::IZERGIN: return pdwpf_izergin(lambdas, ws);
    case PdwpfFormula::KOSTOV: return pdwpf_kostov(lambdas, ws);
    case PdwpfFormula::LATTICE:
        require_distinct(lambdas, "lambda");
        require_distinct(ws, "w");
        return contract_lattice(pdwpf_lattice(lambdas, ws));
    }
    return Rat(0);
}

static std::vector<RatFunc> lift(const std::vector<Rat>& xs) { return {xs.begin(), xs.end()}; }

Rat pdwpf_from_limit(const std::vector<Rat>& lambdas, const std::vector<Rat>& ws) {
    const int n = static_cast<int>(lambdas.size()), l = static_cast<int>(ws.size());
    if (n >= l) throw Error(ErrorKind::SizeError, "partial DWPF needs n < l");
    const int k = l - n;
    // variable 0 is lambda_l, variable i is lambda_{l-i}
    Rat lim = sequential_limit(k, std::vector<int>(k, 1), [&](const std::vector<Rat>& outer) {
        std::vector<RatFunc> lam = lift(lambdas);
        for (int i = k - 1; i >= 1; --i) lam.push_back(RatFunc(outer[i - 1]));
        lam.push_back(RatFunc::var());
        return dwpf_izergin(lam, lift(ws));
    });
    return lim / factorial(k);
}

Rat dwpf_all_infinite(InfSide side, int l) {
    Rat r = factorial(l);
    return (side == InfSide::W && l % 2 == 1) ? -r : r;
}

Rat dwpf_all_infinite_limit(InfSide side, const std::vector<Rat>& fixed) {
    const int l = static_cast<int>(fixed.size());
    return sequential_limit(l, std::vector<int>(l, 1), [&](const std::vector<Rat>& outer) {
        std::vector<RatFunc> moving;
        for (int i = l - 1; i >= 1; --i) moving.push_back(RatFunc(outer[i - 1]));
        moving.push_back(RatFunc::var());
        return side == InfSide::LAMBDA ? dwpf_izergin(moving, lift(fixed)) : dwpf_izergin(lift(fixed), moving);
    });
}

#define SPROD_DWPF_INST(S)                                                                     \
    template void require_distinct<S>(const std::vector<S>&, const char*);                     \
    template S vandermonde<S>(const std::vector<S>&);                                          \
    template S dwpf_izergin<S>(const std::vector<S>&, const std::vector<S>&);                  \
    template S dwpf_kostov<S>(const std::vector<S>&, const std::vector<S>&);                   \
    template S pdwpf_izergin<S>(const std::vector<S>&, const std::vector<S>&);                 \
    template S pdwpf_kostov<S>(const std::vector<S>&, const std::vector<S>&);

SPROD_DWPF_INST(Rat)
SPROD_DWPF_INST(RatFunc)
template void require_distinct<std::complex<double>>(const std::vector<std::complex<double>>&, const char*);
template std::complex<double> vandermonde<std::complex<double>>(const std::vector<std::complex<double>>&);

} // namespace sprod
