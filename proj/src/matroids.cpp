#include "submax/matroids.hpp"

#include <algorithm>
#include <numeric>

namespace submax {

IndependenceOracle counted(const IndependenceOracle& m, LedgerPtr ledger) {
  contract_check(m.valid(), "counted() on an empty independence oracle");
  auto fn = [m, ledger = std::move(ledger)](const SubsetMask& s) {
    ledger->independence_queries.fetch_add(1, std::memory_order_relaxed);
    return m.independent(s);
  };
  if (m.has_closed_rank())
    return IndependenceOracle(fn, m.ground(),
                              [m](const SubsetMask& s) { return m.closed_rank(s); },
                              m.structure());
  return IndependenceOracle(fn, m.ground());
}

IndependenceOracle make_uniform(int n, int k) {
  contract_check(k >= 0 && n >= 0 && n <= SubsetMask::kMaxElements, "bad uniform matroid");
  auto st = std::make_shared<MatroidStructure>();
  st->kind = MatroidStructure::Kind::Uniform;
  st->k = k;
  return IndependenceOracle([k](const SubsetMask& s) { return s.count() <= k; },
                            SubsetMask::first_n(n),
                            [k](const SubsetMask& s) { return std::min(s.count(), k); }, st);
}

IndependenceOracle make_partition(int n, const std::vector<std::pair<SubsetMask, int>>& parts) {
  SubsetMask seen;
  for (const auto& [p, cap] : parts) {
    contract_check(cap >= 0, "partition capacity must be >= 0");
    contract_check(!seen.intersects(p), "partition parts overlap");
    seen |= p;
  }
  contract_check(seen == SubsetMask::first_n(n), "partition parts must cover the ground set");
  auto st = std::make_shared<MatroidStructure>();
  st->kind = MatroidStructure::Kind::Partition;
  st->parts = parts;
  auto rank = [parts](const SubsetMask& s) {
    int r = 0;
    for (const auto& [p, cap] : parts) r += std::min((s & p).count(), cap);
    return r;
  };
  return IndependenceOracle(
      [parts](const SubsetMask& s) {
        for (const auto& [p, cap] : parts)
          if ((s & p).count() > cap) return false;
        return true;
      },
      SubsetMask::first_n(n), rank, st);
}

namespace {

// rank of an edge set = #touched vertices - #components.
int graphic_rank(const SubsetMask& s, const std::vector<std::pair<int, int>>& ends,
                 int num_vertices) {
  std::vector<int> parent(static_cast<size_t>(num_vertices));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  int merges = 0;
  s.for_each([&](ElementId e) {
    int a = find(ends[e].first), b = find(ends[e].second);
    if (a != b) {
      parent[a] = b;
      ++merges;
    }
  });
  return merges;
}

}  // namespace

IndependenceOracle make_graphic(int n, const std::vector<std::pair<int, int>>& edge_endpoints,
                                int num_vertices) {
  contract_check(static_cast<int>(edge_endpoints.size()) == n,
                 "graphic matroid needs one edge per element");
  for (const auto& [a, b] : edge_endpoints)
    contract_check(a >= 0 && a < num_vertices && b >= 0 && b < num_vertices,
                   "graphic edge endpoint out of range");
  auto st = std::make_shared<MatroidStructure>();
  st->kind = MatroidStructure::Kind::Graphic;
  st->edge_endpoints = edge_endpoints;
  st->num_vertices = num_vertices;
  auto rank = [edge_endpoints, num_vertices](const SubsetMask& s) {
    return graphic_rank(s, edge_endpoints, num_vertices);
  };
  return IndependenceOracle(
      [edge_endpoints, num_vertices](const SubsetMask& s) {
        return graphic_rank(s, edge_endpoints, num_vertices) == s.count();
      },
      SubsetMask::first_n(n), rank, st);
}

IndependenceOracle extend_with_dummies(const IndependenceOracle& m, const SubsetMask& dummies) {
  contract_check(m.valid(), "extend_with_dummies() on an empty oracle");
  contract_check(!m.ground().intersects(dummies), "dummy ids overlap the ground set");
  const int r = dummies.count();
  SubsetMask ground = m.ground() | dummies;
  auto fn = [m, dummies, r](const SubsetMask& s) {
    return s.count() <= r && m.independent(s - dummies);
  };
  if (!m.has_closed_rank()) return IndependenceOracle(fn, ground);
  auto st = std::make_shared<MatroidStructure>();
  st->kind = MatroidStructure::Kind::DummyExtended;
  st->inner = m.structure();
  st->dummies = dummies;
  st->rank = r;
  auto rank = [m, dummies, r](const SubsetMask& s) {
    return std::min(r, m.closed_rank(s - dummies) + (s & dummies).count());
  };
  return IndependenceOracle(fn, ground, rank, st);
}

int rank_greedy(const IndependenceOracle& m, const SubsetMask& a) {
  SubsetMask grown;
  a.for_each([&](ElementId u) {
    SubsetMask cand = grown;
    cand.set(u);
    if (m.independent(cand)) grown = cand;
  });
  return grown.count();
}

MinorHandle::MinorHandle(const IndependenceOracle& m, SubsetMask c, SubsetMask d)
    : base(&m), restricted_to(c), contracted_by(d) {
  contract_check(!c.intersects(d), "minor restriction and contraction overlap");
  contract_check(c.subset_of(m.ground()) && d.subset_of(m.ground()),
                 "minor sets outside the ground set");
}

int MinorHandle::rank(const SubsetMask& a) const {
  contract_check(a.subset_of(restricted_to), "minor rank query outside the minor's ground");
  if (base->has_closed_rank())
    return base->closed_rank(a | contracted_by) - base->closed_rank(contracted_by);
  return rank_oracle(a);
}

int MinorHandle::rank_oracle(const SubsetMask& a) const {
  contract_check(a.subset_of(restricted_to), "minor rank query outside the minor's ground");
  SubsetMask grown;
  auto grow = [&](const SubsetMask& from) {
    from.for_each([&](ElementId u) {
      SubsetMask cand = grown;
      cand.set(u);
      if (base->independent(cand)) grown = cand;
    });
  };
  grow(contracted_by);
  const int base_rank = grown.count();
  grow(a);
  return grown.count() - base_rank;
}

namespace {

bool in_unit_box(const MarginalVec& x, const SubsetMask& ground) {
  bool ok = true;
  ground.for_each([&](ElementId u) {
    if (!rat_in_unit(x[u])) ok = false;
  });
  return ok;
}

// Structured membership in the independent-set polytope, when the structure
// admits one. Returns -1 unknown, 0 false, 1 true. Assumes the box check ran.
int structured_in_polytope(const std::shared_ptr<const MatroidStructure>& st,
                           const MarginalVec& x, const SubsetMask& ground) {
  if (!st) return -1;
  switch (st->kind) {
    case MatroidStructure::Kind::Uniform:
      return x.sum_over(ground) <= st->k ? 1 : 0;
    case MatroidStructure::Kind::Partition: {
      for (const auto& [p, cap] : st->parts)
        if (x.sum_over(p & ground) > cap) return 0;
      return 1;
    }
    case MatroidStructure::Kind::DummyExtended: {
      if (x.sum_over(ground) > st->rank) return 0;
      int inner = structured_in_polytope(st->inner, x, ground - st->dummies);
      return inner;  // dummy coordinates are only box- and sum-constrained
    }
    default:
      return -1;
  }
}

}  // namespace

bool in_matroid_polytope(const IndependenceOracle& m, const MarginalVec& x) {
  const SubsetMask ground = m.ground();
  if (!in_unit_box(x, ground)) return false;
  int structured = structured_in_polytope(m.structure(), x, ground);
  if (structured >= 0) return structured == 1;

  const int n = ground.count();
  if (n > 20)
    throw CapabilityError("polytope membership: ground set has " + std::to_string(n) +
                          " elements, exhaustive mode is capped at 20 and no structured "
                          "checker applies");
  std::vector<ElementId> ids;
  ground.for_each([&](ElementId u) { ids.push_back(u); });
  auto rank_of = [&](const SubsetMask& a) {
    return m.has_closed_rank() ? m.closed_rank(a) : rank_greedy(m, a);
  };
  for (uint64_t bits = 1; bits < (uint64_t{1} << n); ++bits) {
    SubsetMask a;
    Rat s(0);
    for (int i = 0; i < n; ++i)
      if ((bits >> i) & 1) {
        a.set(ids[i]);
        s += x[ids[i]];
      }
    if (s > rank_of(a)) return false;
  }
  return true;
}

bool in_base_polytope(const IndependenceOracle& m, const MarginalVec& x) {
  const SubsetMask ground = m.ground();
  int full_rank = m.has_closed_rank() ? m.closed_rank(ground) : rank_greedy(m, ground);
  if (x.sum_over(ground) != full_rank) return false;
  return in_matroid_polytope(m, x);
}

}  // namespace submax
