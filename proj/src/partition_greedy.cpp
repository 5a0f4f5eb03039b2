#include "submax/partition_greedy.hpp"

#include <cmath>

namespace submax {

Partition greedy_partition(const IndependenceOracle& m, const ValueOracle& f, int ell) {
  contract_check(ell >= 1, "greedy_partition: ell must be >= 1");
  Partition out;
  out.parts.assign(static_cast<size_t>(ell), SubsetMask{});
  std::vector<Rat> part_value(static_cast<size_t>(ell), f(SubsetMask{}));

  const SubsetMask ground = m.ground();
  for (;;) {
    // Candidates whose addition keeps the union independent. Empty iff the
    // union is a base.
    std::vector<ElementId> candidates;
    (ground - out.united).for_each([&](ElementId u) {
      SubsetMask cand = out.united;
      cand.set(u);
      if (m.independent(cand)) candidates.push_back(u);
    });
    if (candidates.empty()) break;

    bool have_best = false;
    Rat best_gain(0);
    ElementId best_u = 0;
    int best_j = 0;
    for (ElementId u : candidates) {
      for (int j = 0; j < ell; ++j) {
        SubsetMask tj = out.parts[j];
        tj.set(u);
        Rat gain = f(tj) - part_value[j];
        if (!have_best || gain > best_gain) {
          have_best = true;
          best_gain = gain;
          best_u = u;
          best_j = j;
        }
      }
    }
    out.parts[best_j].set(best_u);
    out.united.set(best_u);
    part_value[best_j] += best_gain;
  }
  return out;
}

unsigned long threshold_pass_count(const Rat& eps, int rank) {
  contract_check(eps > 0 && eps < Rat(2), "threshold_pass_count: eps out of range");
  if (rank <= 0) return 0;
  const double e = rat_d(eps);
  const double x = (2.0 / e) * std::log(2.0 * rank / e);
  return x <= 0 ? 0 : static_cast<unsigned long>(std::ceil(x));
}

Partition threshold_greedy_partition(const IndependenceOracle& m, const ValueOracle& f, int ell,
                                     const Rat& eps, const SubsetMask& dummies) {
  contract_check(ell >= 1, "threshold_greedy_partition: ell must be >= 1");
  contract_check(eps > 0 && eps <= 1, "threshold_greedy_partition: eps must be in (0,1]");
  const int rank = dummies.count();

  Partition out;
  out.parts.assign(static_cast<size_t>(ell), SubsetMask{});

  // Drop self loops; dummies never are one (for rank >= 1).
  SubsetMask live;
  m.ground().for_each([&](ElementId u) {
    if (m.independent(SubsetMask::single(u))) live.set(u);
  });

  Rat tau(0);
  live.for_each([&](ElementId u) {
    Rat v = f(SubsetMask::single(u));
    if (v > tau) tau = v;
  });

  std::vector<Rat> part_value(static_cast<size_t>(ell), f(SubsetMask{}));
  const unsigned long passes = threshold_pass_count(eps, rank);
  const Rat decay = 1 - eps / 2;
  for (unsigned long k = 0; k < passes; ++k) {
    tau *= decay;
    // One independence check per element per pass; all parts tried before
    // moving on so the check is not repeated per part.
    for (int ui = live.lowest(); ui >= 0; ui = live.next_above(ui)) {
      const ElementId u = static_cast<ElementId>(ui);
      if (out.united.test(u)) continue;
      SubsetMask cand = out.united;
      cand.set(u);
      if (!m.independent(cand)) continue;
      for (int j = 0; j < ell; ++j) {
        SubsetMask tj = out.parts[j];
        tj.set(u);
        Rat value = f(tj);
        if (value - part_value[j] >= tau) {
          out.parts[j] = tj;
          out.united.set(u);
          part_value[j] = value;
          break;
        }
      }
    }
  }

  // Pad to a base with dummies; always possible and query-free because the
  // union is independent and |dummies| equals the rank.
  for (int di = dummies.lowest(); di >= 0 && out.united.count() < rank;
       di = dummies.next_above(di)) {
    const ElementId d = static_cast<ElementId>(di);
    if (out.united.test(d)) continue;
    out.parts[0].set(d);
    out.united.set(d);
  }
  contract_check(out.united.count() == rank, "threshold_greedy_partition: padding fell short");
  return out;
}

}  // namespace submax
