#pragma once

#include "submax/extension.hpp"
#include "submax/partition_greedy.hpp"

namespace submax {

struct McgIteration {
  int i = 0;  // 1-based
  std::vector<SubsetMask> parts;
  SubsetMask united;  // union of the parts, a base of the extended matroid
  SparseExtVec y_before;
  SparseExtVec y_after;
  Rat value_after;  // F(y_after), instrumentation (not charged to the ledger)
};

struct McgTrace {
  Rat eps_input;
  Rat eps_effective;  // 1 / ceil(1/eps)
  Rat delta;          // eps_effective^3
  long ell = 0;       // 1 / eps_effective
  long iterations = 0;
  int n_total = 0;
  SubsetMask dummies;
  std::vector<McgIteration> steps;
  SparseExtVec y_final;
  Rat value_final;  // F(y_final)
};

// Builds a sparse fractional solution whose marginal vector lies in the
// matroid polytope. Each iteration partitions a base of the extended matroid
// greedily against the residual objective g(S) = F(y v 1_S) and folds it
// into y with a damped probabilistic-sum step of size delta.
//
// `m` and `f` should be the counted, dummy-extended oracles; `f_plain` is an
// uncounted twin used only to record trace values, so the ledger reflects
// the algorithm's own queries.
//
// Throws CapabilityError before doing any work when the support bound
// (1/eps_effective)^4 exceeds the evaluator's ff cap.
McgTrace measured_continuous_greedy(const IndependenceOracle& m, const ValueOracle& f,
                                    const ValueOracle& f_plain, const Rat& eps,
                                    const SubsetMask& dummies, int n_total,
                                    int ff_cap = ExtensionEvaluator::kDefaultFfCap);

// The deterministic estimate of the optimum: F of the final vector.
inline Rat value_estimate(const McgTrace& trace) { return trace.value_final; }

struct Decomposition {
  std::vector<SubsetMask> sets;  // S_i, one per iteration, each independent
  MarginalVec x;                 // delta * sum of indicator vectors of the S_i
};

// Randomly decomposes the trace into independent sets without any oracle
// queries: S_i keeps each element of iteration i's base with probability
// (1-delta)^(number of earlier bases containing it), so E[x] equals
// marg(y_final) coordinate-wise. Deterministic for a fixed seed.
Decomposition random_decomposition(const McgTrace& trace, uint64_t seed);

// Exact per-element inclusion probability of u in S_i aggregated over i,
// i.e. E[x_u]; equals marg(y_final) and is used by verification.
Rat decomposition_mean(const McgTrace& trace, ElementId u);

}  // namespace submax
