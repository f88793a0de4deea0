#pragma once

#include <complex>
#include <vector>

#include "sprod/exactnum.hpp"
#include "sprod/vertexmodel.hpp"

namespace sprod {

// Throws DuplicateRapidity if two entries coincide.
template <class S>
void require_distinct(const std::vector<S>& xs, const char* what);

template <class S>
S vandermonde(const std::vector<S>& xs); // prod_{i<j} (x_j - x_i)

// Izergin determinant. The factor prod (l_i - w_j + 1) is absorbed row by row,
// which leaves only the genuine poles l_i = w_j in the entries.
template <class S>
S dwpf_izergin(const std::vector<S>& lambdas, const std::vector<S>& ws);

template <class S>
S dwpf_kostov(const std::vector<S>& lambdas, const std::vector<S>& ws);

// Partial domain wall partition function, |lambdas| = n < |ws| = l.
template <class S>
S pdwpf_izergin(const std::vector<S>& lambdas, const std::vector<S>& ws);
template <class S>
S pdwpf_kostov(const std::vector<S>& lambdas, const std::vector<S>& ws);

enum class PdwpfFormula { IZERGIN, KOSTOV, LATTICE };
Rat pdwpf(const std::vector<Rat>& lambdas, const std::vector<Rat>& ws, PdwpfFormula formula);

// (1/(l-n)!) lim l_l ... l_{n+1} Z(l|w), last rapidity first.
Rat pdwpf_from_limit(const std::vector<Rat>& lambdas, const std::vector<Rat>& ws);

enum class InfSide { LAMBDA, W };
// Closed form: l! on the lambda side, (-1)^l l! on the w side.
Rat dwpf_all_infinite(InfSide side, int l);
// Sequential limit of the Izergin form with the other set held at `fixed`.
Rat dwpf_all_infinite_limit(InfSide side, const std::vector<Rat>& fixed);

} // namespace sprod
