#include "submax/oracles.hpp"

namespace submax {

ValueOracle counted(const ValueOracle& f, LedgerPtr ledger) {
  contract_check(f.valid(), "counted() on an empty oracle");
  return ValueOracle(
      [f, ledger = std::move(ledger)](const SubsetMask& s) {
        ledger->value_queries.fetch_add(1, std::memory_order_relaxed);
        return f(s);
      },
      f.monotone());
}

ValueOracle with_dummies(const ValueOracle& f, const SubsetMask& dummies) {
  contract_check(f.valid(), "with_dummies() on an empty oracle");
  return ValueOracle([f, dummies](const SubsetMask& s) { return f(s - dummies); },
                     f.monotone());
}

ValueOracle make_coverage(const std::vector<SubsetMask>& covers,
                          const std::vector<long>& item_weights) {
  for (long w : item_weights) contract_check(w >= 0, "coverage item weight must be >= 0");
  return ValueOracle(
      [covers, item_weights](const SubsetMask& s) {
        SubsetMask covered;
        s.for_each([&](ElementId u) {
          if (u < covers.size()) covered |= covers[u];
        });
        long total = 0;
        covered.for_each([&](ElementId item) { total += item_weights[item]; });
        return Rat(total);
      },
      /*monotone=*/true);
}

ValueOracle make_cut(const std::vector<CutEdge>& edges) {
  for (const CutEdge& e : edges) contract_check(e.w >= 0, "cut edge weight must be >= 0");
  return ValueOracle(
      [edges](const SubsetMask& s) {
        long total = 0;
        for (const CutEdge& e : edges)
          if (s.test(e.a) != s.test(e.b)) total += e.w;
        return Rat(total);
      },
      /*monotone=*/false);
}

ValueOracle make_modular(const std::vector<long>& weights) {
  for (long w : weights) contract_check(w >= 0, "modular weight must be >= 0");
  return ValueOracle(
      [weights](const SubsetMask& s) {
        long total = 0;
        s.for_each([&](ElementId u) {
          if (u < weights.size()) total += weights[u];
        });
        return Rat(total);
      },
      /*monotone=*/true);
}

}  // namespace submax
