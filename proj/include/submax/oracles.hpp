#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "submax/core.hpp"

namespace submax {

// Counts underlying oracle invocations. Wrappers forward 1:1 and never
// memoize, so the counters are exactly the number of times the wrapped
// function was evaluated.
struct QueryLedger {
  std::atomic<uint64_t> value_queries{0};
  std::atomic<uint64_t> independence_queries{0};

  struct Snapshot {
    uint64_t value = 0;
    uint64_t independence = 0;
  };
  Snapshot snapshot() const {
    return {value_queries.load(std::memory_order_relaxed),
            independence_queries.load(std::memory_order_relaxed)};
  }
};

using LedgerPtr = std::shared_ptr<QueryLedger>;

// Black-box access to a non-negative set function. Evaluation must be pure
// and deterministic; the monotone flag is declared by the constructor, not
// verified.
class ValueOracle {
 public:
  using Fn = std::function<Rat(const SubsetMask&)>;

  ValueOracle() = default;
  ValueOracle(Fn fn, bool monotone) : fn_(std::move(fn)), monotone_(monotone) {}

  Rat operator()(const SubsetMask& s) const { return fn_(s); }
  bool monotone() const { return monotone_; }
  bool valid() const { return static_cast<bool>(fn_); }

 private:
  Fn fn_;
  bool monotone_ = false;
};

// Forwarding wrapper that bumps value_queries once per evaluation.
ValueOracle counted(const ValueOracle& f, LedgerPtr ledger);

// Extends the ground set with dummy elements (the given mask): every dummy
// has marginal contribution exactly zero, and each call still costs one
// underlying query because it just evaluates f(S \ D).
ValueOracle with_dummies(const ValueOracle& f, const SubsetMask& dummies);

// Built-in objective families. All take element ids over [0, n) and integer
// weights, so every value is an exact (integral) rational.

// f(S) = total weight of distinct items covered by the elements of S.
// covers[u] is the item mask of element u over the item universe.
ValueOracle make_coverage(const std::vector<SubsetMask>& covers,
                          const std::vector<long>& item_weights);

// f(S) = total weight of edges with exactly one endpoint in S.
struct CutEdge {
  ElementId a;
  ElementId b;
  long w;
};
ValueOracle make_cut(const std::vector<CutEdge>& edges);

// f(S) = sum of per-element weights (all non-negative).
ValueOracle make_modular(const std::vector<long>& weights);

}  // namespace submax
