#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "submax/oracles.hpp"

namespace submax {

// Structural tag carried by built-in matroids so polytope membership and
// tight-set searches can use query-free rank formulas. Generic oracles carry
// none and fall back to greedy growth against the independence oracle.
struct MatroidStructure {
  enum class Kind { Uniform, Partition, Graphic, DummyExtended };
  Kind kind;

  int k = 0;                                         // Uniform
  std::vector<std::pair<SubsetMask, int>> parts;     // Partition: (part, capacity)
  std::vector<std::pair<int, int>> edge_endpoints;   // Graphic: per element
  int num_vertices = 0;                              // Graphic
  std::shared_ptr<const MatroidStructure> inner;     // DummyExtended
  SubsetMask dummies;                                // DummyExtended
  int rank = 0;                                      // DummyExtended: rank of inner
};

// Independence-oracle access to a matroid. independent() must be pure and
// deterministic; closed_rank(), when present, computes ranks without any
// oracle queries.
class IndependenceOracle {
 public:
  using Fn = std::function<bool(const SubsetMask&)>;
  using RankFn = std::function<int(const SubsetMask&)>;

  IndependenceOracle() = default;
  IndependenceOracle(Fn fn, SubsetMask ground) : fn_(std::move(fn)), ground_(ground) {}
  IndependenceOracle(Fn fn, SubsetMask ground, RankFn rank,
                     std::shared_ptr<const MatroidStructure> st)
      : fn_(std::move(fn)), ground_(ground), rank_(std::move(rank)), structure_(std::move(st)) {}

  bool independent(const SubsetMask& s) const { return fn_(s); }
  const SubsetMask& ground() const { return ground_; }
  bool valid() const { return static_cast<bool>(fn_); }

  bool has_closed_rank() const { return static_cast<bool>(rank_); }
  int closed_rank(const SubsetMask& s) const { return rank_(s); }
  const std::shared_ptr<const MatroidStructure>& structure() const { return structure_; }

 private:
  Fn fn_;
  SubsetMask ground_;
  RankFn rank_;
  std::shared_ptr<const MatroidStructure> structure_;
};

// Forwarding wrapper bumping independence_queries once per call. The closed
// rank path is query-free by definition and is forwarded uncounted.
IndependenceOracle counted(const IndependenceOracle& m, LedgerPtr ledger);

IndependenceOracle make_uniform(int n, int k);
// parts must partition [0, n).
IndependenceOracle make_partition(int n, const std::vector<std::pair<SubsetMask, int>>& parts);
// One edge per ground element; independent = acyclic.
IndependenceOracle make_graphic(int n, const std::vector<std::pair<int, int>>& edge_endpoints,
                                int num_vertices);

// S independent in the extension iff |S| <= |D| and S \ D independent in M;
// requires |D| = rank(M). One underlying query per call.
IndependenceOracle extend_with_dummies(const IndependenceOracle& m, const SubsetMask& dummies);

// Greedy growth in ascending element order; exactly |A| independence queries.
int rank_greedy(const IndependenceOracle& m, const SubsetMask& a);

// A matroid minor: base restricted to `restricted_to` after contracting
// `contracted_by`. The effective ground set is `restricted_to`.
struct MinorHandle {
  const IndependenceOracle* base = nullptr;
  SubsetMask restricted_to;
  SubsetMask contracted_by;

  MinorHandle() = default;
  MinorHandle(const IndependenceOracle& m, SubsetMask c, SubsetMask d);

  // r(A) in the minor; uses the base's closed rank when available.
  int rank(const SubsetMask& a) const;

  // Always the oracle path: two greedy growths (contracted set first, then A
  // on top of its basis), at most |A u contracted_by| independence queries.
  int rank_oracle(const SubsetMask& a) const;
};

inline int minor_rank(const MinorHandle& h, const SubsetMask& a) { return h.rank_oracle(a); }

// Exhaustive membership (<= 20 effective elements), with query-free
// structured checks for uniform / partition matroids and their dummy
// extensions at any size.
bool in_matroid_polytope(const IndependenceOracle& m, const MarginalVec& x);
bool in_base_polytope(const IndependenceOracle& m, const MarginalVec& x);

}  // namespace submax
