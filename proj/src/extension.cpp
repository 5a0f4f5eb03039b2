#include "submax/extension.hpp"

#include <vector>

#include "submax/rng.hpp"

namespace submax {

namespace {

struct FracEntry {
  SubsetMask key;
  Rat p;
};

// Depth-first enumeration over include/exclude decisions for the fractional
// keys, carrying the running union and path weight. One oracle query per
// leaf; the recursion order (map order, exclude before include) is fixed.
Rat enumerate_collections(const ValueOracle& f, const std::vector<FracEntry>& fracs,
                          size_t idx, const SubsetMask& united, const Rat& weight) {
  if (idx == fracs.size()) return weight * f(united);
  const FracEntry& e = fracs[idx];
  Rat total = enumerate_collections(f, fracs, idx + 1, united, weight * (1 - e.p));
  total += enumerate_collections(f, fracs, idx + 1, united | e.key, weight * e.p);
  return total;
}

}  // namespace

Rat ExtensionEvaluator::eval_F(const SparseExtVec& y) const {
  if (y.ff() > ff_cap_)
    throw CapabilityError("eval_F: ff(y) = " + std::to_string(y.ff()) +
                          " exceeds the enumeration cap " + std::to_string(ff_cap_));
  SubsetMask fixed = y.integral_union();
  std::vector<FracEntry> fracs;
  fracs.reserve(static_cast<size_t>(y.ff()));
  for (const auto& [s, p] : y.entries())
    if (p != 1) fracs.push_back({s, p});
  return enumerate_collections(*f_, fracs, 0, fixed, Rat(1));
}

Rat ExtensionEvaluator::eval_g(const SparseExtVec& y, const SubsetMask& a) const {
  return eval_F(y.join_indicator(a));
}

Rat ExtensionEvaluator::partial_wrt(const SparseExtVec& y, const SubsetMask& s) const {
  if (s.empty()) return Rat(0);  // F does not depend on the empty-set coordinate
  SparseExtVec y1 = y, y0 = y;
  y1.set(s, Rat(1));
  y0.set(s, Rat(0));
  return eval_F(y1) - eval_F(y0);
}

Rat ExtensionEvaluator::eval_Fbar_exact(const MarginalVec& x) const {
  SubsetMask fixed;
  std::vector<FracEntry> fracs;
  for (int u = 0; u < x.size(); ++u) {
    const Rat& p = x[u];
    contract_check(rat_in_unit(p), "eval_Fbar_exact: coordinate outside [0,1]");
    if (p == 1)
      fixed.set(static_cast<ElementId>(u));
    else if (p != 0)
      fracs.push_back({SubsetMask::single(static_cast<ElementId>(u)), p});
  }
  if (fracs.size() > 20)
    throw CapabilityError("eval_Fbar_exact: " + std::to_string(fracs.size()) +
                          " fractional coordinates exceed the cap of 20");
  return enumerate_collections(*f_, fracs, 0, fixed, Rat(1));
}

double ExtensionEvaluator::eval_Fbar_sample(const MarginalVec& x, long samples,
                                            uint64_t seed) const {
  contract_check(samples >= 1, "eval_Fbar_sample: samples must be >= 1");
  Rng rng(seed);
  double total = 0;
  for (long t = 0; t < samples; ++t) {
    SubsetMask s;
    for (int u = 0; u < x.size(); ++u)
      if (rng.bernoulli(x[u])) s.set(static_cast<ElementId>(u));
    total += rat_d((*f_)(s));
  }
  return total / static_cast<double>(samples);
}

}  // namespace submax
