#pragma once

#include <cstdint>
#include <vector>

#include "sprod/exactnum.hpp"
#include "sprod/spinchain_su2.hpp"

namespace sprod {

// One two-block split of an index set {0..n-1}; bit i of mask puts i in part I.
struct PartitionSplit {
    std::uint32_t mask = 0;
    std::vector<int> part_I, part_II;
};

// All 2^n splits in ascending mask order.
std::vector<PartitionSplit> enumerate_splits(int n);

// Pairs (split of C, split of B) with |C_I| = |B_I|, in ascending (maskC, maskB) order.
std::vector<std::pair<PartitionSplit, PartitionSplit>> enumerate_paired_splits(int n);

template <class S>
std::vector<S> pick(const std::vector<S>& xs, const std::vector<int>& idx) {
    std::vector<S> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(xs[static_cast<size_t>(i)]);
    return out;
}

/*
 * The partition sum for <lC|lB> with pseudo-vacuum eigenvalues supplied per
 * rapidity: aC[i] = a(lC_i), dC[i] = d(lC_i), and likewise for B.
 */
template <class S>
S sp_sum_values(const std::vector<S>& lambdaC, const std::vector<S>& lambdaB, const std::vector<S>& aC, const std::vector<S>& dC,
                const std::vector<S>& aB, const std::vector<S>& dB);

Rat sp_sum(const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB, const EigenfunctionSpec& a, const EigenfunctionSpec& d);
Rat sp_sum_normalized(const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB, const EigenfunctionSpec& r);

// On-shell B side: r(lB_i) replaced by -prod_j (lB_i - lB_j + 1)/(lB_i - lB_j - 1).
template <class S>
S slavnov_onshell_sum_values(const std::vector<S>& lambdaC, const std::vector<S>& lambdaB, const std::vector<S>& rC);
template <class S>
S slavnov_det_values(const std::vector<S>& lambdaC, const std::vector<S>& lambdaB, const std::vector<S>& rC);

Rat slavnov_onshell_sum(const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB, const EigenfunctionSpec& rC);
Rat slavnov_det(const std::vector<Rat>& lambdaC, const std::vector<Rat>& lambdaB, const EigenfunctionSpec& rC);

enum class InfiniteForm { SUM, DET };
Rat sp_infinite(const std::vector<Rat>& lambdaC, const EigenfunctionSpec& rC, InfiniteForm form);
Rat sp_infinite_values(const std::vector<Rat>& lambdaC, const std::vector<Rat>& rC, InfiniteForm form);
// (1/l!) lim lB_l ... lB_1 of the on-shell sum, lB_l first.
Rat sp_infinite_from_limit(const std::vector<Rat>& lambdaC, const std::vector<Rat>& rC);

} // namespace sprod
