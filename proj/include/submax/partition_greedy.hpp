#pragma once

#include <vector>

#include "submax/matroids.hpp"

namespace submax {

// Disjoint sets T_1..T_ell whose union is independent in the (dummy
// extended) matroid; the exact greedy additionally leaves the union a base.
struct Partition {
  std::vector<SubsetMask> parts;
  SubsetMask united;
};

// Exact greedy partitioner. Repeatedly adds the (element, part) pair with
// the largest marginal value among elements whose addition keeps the union
// independent, until the union is a base. Ties break to the smallest element
// id, then the smallest part index. The matroid must be dummy extended so a
// base always completes with non-negative additions.
// Cost: O(n*r*ell) value and O(n*r) independence queries.
Partition greedy_partition(const IndependenceOracle& m, const ValueOracle& f, int ell);

// Number of descending-threshold passes used by threshold_greedy_partition.
unsigned long threshold_pass_count(const Rat& eps, int rank);

// Thresholded variant. Starts from the maximum singleton value, decays the
// threshold by (1 - eps/2) per pass, and during each pass adds any element
// whose addition keeps the union independent to the first part where its
// marginal clears the threshold. Self loops are removed up front (<= n
// independence queries); afterwards T_1 is padded with dummies to a base,
// query-free. Thresholds and comparisons are exact rationals.
// Cost: at most I*n*ell + 2n value and I*n + n independence queries, where
// I is threshold_pass_count(eps, |dummies|).
Partition threshold_greedy_partition(const IndependenceOracle& m, const ValueOracle& f, int ell,
                                     const Rat& eps, const SubsetMask& dummies);

}  // namespace submax
