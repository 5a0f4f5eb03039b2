#pragma once

#include "submax/extension.hpp"
#include "submax/matroids.hpp"

namespace submax {

// Raises the coordinate of the dummy set D until the marginal mass equals
// the rank, which lands marg(y) in the base polytope of the dummy-extended
// matroid without changing F (dummies never change f). The increment solves
// for the exact mass gap, accounting for any probability the dummies already
// carry; when they carry none it reduces to (r - sum of marginals) / r.
SparseExtVec lift_to_base_polytope(const SparseExtVec& y, const IndependenceOracle& m,
                                   const SubsetMask& dummies, int n_total);

// Makes element u stochastically independent of the rest: the singleton {u}
// absorbs marg_u(y) and every other set containing u hands its probability
// to the same set without u. Marginals are preserved exactly, previously
// relaxed elements stay relaxed, ff grows by at most one, and F cannot
// decrease (for submodular f).
SparseExtVec relax_element(const SparseExtVec& y, ElementId u, int n_total);

struct TightSetResult {
  Rat delta;          // min over {u} <= A <= N'-v of rank(A) - x(A), >= 0
  SubsetMask witness; // the minimizing A; ties to smallest |A|, then smallest mask
};

// Exhaustive tight-set search over the minor, exact arithmetic. Rank values
// come from the query-free closed form when the base matroid has one, and
// from greedy oracle growth otherwise. Capped at 20 effective elements.
TightSetResult tight_set_min(const MinorHandle& h, const MarginalVec& x, ElementId u,
                             ElementId v);

// Moves probability mass from the singleton of v to the singleton of u until
// either v's coordinate empties (A' = {v}) or a rank constraint becomes
// tight (A' = the tight set). Requires both elements relaxed and
// marg(y)|N' in the minor's base polytope.
std::pair<SparseExtVec, SubsetMask> hit_constraint(const SparseExtVec& y, const MinorHandle& h,
                                                   ElementId u, ElementId v, int n_total,
                                                   bool paranoid = false);

struct PipageOptions {
  bool paranoid = false;  // recheck invariants after every mutation
  int ff_cap = ExtensionEvaluator::kDefaultFfCap;
};

struct PipageStats {
  long loop_iterations = 0;
  long relax_calls = 0;
  long f_evaluations = 0;  // algorithmic F evaluations (2 per iteration)
  int ff_initial = 0;
  int max_ff = 0;
  int ff_budget = 0;
  int max_recursion_depth = 0;
};

// Deterministic pipage rounding. Requires marg(y) in the base polytope of
// the dummy-extended matroid (apply lift_to_base_polytope first). Rounds y
// to an integral vector without ever decreasing F, recursing on the smaller
// side whenever a rank constraint splits the problem, and returns the
// elements with marginal 1, dummies removed. The loop runs at most 2n times
// and ff(y) never exceeds ff(input) + 2 + ceil(log2 n).
SubsetMask deterministic_pipage(const IndependenceOracle& m, const ValueOracle& f,
                                SparseExtVec y, const SubsetMask& dummies, int n_total,
                                const PipageOptions& opts = {}, PipageStats* stats = nullptr);

// Exhaustive base-polytope membership for a minor (paranoid checks, tests).
bool minor_in_base_polytope(const MinorHandle& h, const MarginalVec& x);

}  // namespace submax
