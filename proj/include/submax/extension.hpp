#pragma once

#include "submax/oracles.hpp"

namespace submax {

// Evaluates the extended multilinear extension F of a set function f, where
// each stored coordinate y_S is the probability that the whole set S joins
// the random union, independently across coordinates.  F(y) is the expected
// f-value of that union.
//
// Coordinates equal to 1 are merged into a single fixed union before
// enumeration, so one evaluation costs exactly 2^ff(y) value-oracle queries.
class ExtensionEvaluator {
 public:
  static constexpr int kDefaultFfCap = 24;

  explicit ExtensionEvaluator(const ValueOracle& f, int ff_cap = kDefaultFfCap)
      : f_(&f), ff_cap_(ff_cap) {}

  int ff_cap() const { return ff_cap_; }
  const ValueOracle& oracle() const { return *f_; }

  // Exact F(y); exactly 2^ff(y) queries. ff(y) above the cap is a
  // capability error raised before any query is made.
  Rat eval_F(const SparseExtVec& y) const;

  // g_y(A) = F(y with coordinate A forced to 1). Never costs more queries
  // than eval_F(y) because joining an integral coordinate cannot raise ff.
  Rat eval_g(const SparseExtVec& y, const SubsetMask& a) const;

  // dF/dy_S, computed exactly as F(y|y_S=1) - F(y|y_S=0) by multilinearity.
  Rat partial_wrt(const SparseExtVec& y, const SubsetMask& s) const;

  // The standard multilinear extension on a per-element vector: expected f
  // of a set containing each element independently with probability x_u.
  // Integral coordinates are folded; at most 20 fractional ones allowed.
  Rat eval_Fbar_exact(const MarginalVec& x) const;

  // Monte Carlo estimate of the standard extension; deterministic per seed.
  double eval_Fbar_sample(const MarginalVec& x, long samples, uint64_t seed) const;

 private:
  const ValueOracle* f_;
  int ff_cap_;
};

}  // namespace submax
