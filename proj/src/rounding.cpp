#include "submax/rounding.hpp"

#include <algorithm>

namespace submax {

namespace {

int ceil_log2(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

}  // namespace

SparseExtVec lift_to_base_polytope(const SparseExtVec& y, const IndependenceOracle& m,
                                   const SubsetMask& dummies, int n_total) {
  const int rank = dummies.count();
  MarginalVec marg = y.marginals(n_total);
  try {
    if (!in_matroid_polytope(m, marg))
      throw ContractError("lift: marginal vector outside the matroid polytope");
  } catch (const CapabilityError&) {
    // Membership not affordably checkable at this size; the caller's
    // precondition stands unverified.
  }

  const Rat total = marg.sum_over(m.ground());
  if (total == rank) return y;

  // Existing complement mass of each dummy under y.
  Rat q_sum(0);
  dummies.for_each([&](ElementId d) {
    Rat q(1);
    for (const auto& [s, p] : y.entries())
      if (s.test(d)) q *= (1 - p);
    q_sum += q;
  });
  contract_check(q_sum > 0, "lift: dummies saturated but mass below rank");

  const Rat non_dummy = total - marg.sum_over(dummies);
  const Rat a = y.get(dummies);
  const Rat beta = (1 - a) * (1 - non_dummy / q_sum);
  contract_check(beta >= 0 && a + beta <= 1, "lift: increment outside [0,1]");

  SparseExtVec out = y;
  out.set(dummies, a + beta);
  contract_check(out.marginals(n_total).sum_over(m.ground()) == rank,
                 "lift: marginal mass does not meet the rank");
  return out;
}

SparseExtVec relax_element(const SparseExtVec& y, ElementId u, int n_total) {
  contract_check(static_cast<int>(u) < n_total, "relax: element outside ground set");
  Rat marg_u(1);
  for (const auto& [s, p] : y.entries())
    if (s.test(u)) marg_u *= (1 - p);
  marg_u = 1 - marg_u;

  const SubsetMask u_mask = SubsetMask::single(u);
  SparseExtVec out;
  for (const auto& [s, p] : y.entries()) {
    if (s.test(u)) continue;
    out.set(s, 1 - (1 - p) * (1 - y.get(s | u_mask)));
  }
  for (const auto& [s, p] : y.entries()) {
    if (!s.test(u)) continue;
    SubsetMask rest = s - u_mask;
    if (rest.empty()) continue;            // the singleton is overwritten below
    if (y.get(rest) == 0) out.set(rest, p);  // partner key absent from y
  }
  out.set(u_mask, marg_u);
  return out;
}

TightSetResult tight_set_min(const MinorHandle& h, const MarginalVec& x, ElementId u,
                             ElementId v) {
  const SubsetMask np = h.restricted_to;
  contract_check(u != v && np.test(u) && np.test(v),
                 "tight_set_min: u, v must be distinct elements of the minor");
  const int n_eff = np.count();
  if (n_eff > 20)
    throw CapabilityError("tight_set_min: minor has " + std::to_string(n_eff) +
                          " elements; exhaustive search is capped at 20");

  std::vector<ElementId> free_ids;
  (np - SubsetMask::single(u) - SubsetMask::single(v)).for_each([&](ElementId w) {
    free_ids.push_back(w);
  });

  SubsetMask a = SubsetMask::single(u);
  Rat x_sum = x[u];
  Rat best_val = Rat(h.rank(a)) - x_sum;
  SubsetMask best_mask = a;
  int best_card = 1;

  // Gray-code walk so the running x-sum changes by one coordinate per step.
  const uint64_t limit = uint64_t{1} << free_ids.size();
  for (uint64_t t = 1; t < limit; ++t) {
    const ElementId w = free_ids[static_cast<size_t>(__builtin_ctzll(t))];
    if (a.test(w)) {
      a.reset(w);
      x_sum -= x[w];
    } else {
      a.set(w);
      x_sum += x[w];
    }
    Rat val = Rat(h.rank(a)) - x_sum;
    if (val < best_val) {
      best_val = val;
      best_mask = a;
      best_card = a.count();
    } else if (val == best_val) {
      const int card = a.count();
      if (card < best_card || (card == best_card && a < best_mask)) {
        best_mask = a;
        best_card = card;
      }
    }
  }
  contract_check(best_val >= 0,
                 "tight_set_min: negative minimum; x violates a rank constraint");
  return {best_val, best_mask};
}

namespace {

bool is_relaxed(const SparseExtVec& y, ElementId u) {
  for (const auto& [s, p] : y.entries())
    if (s.test(u) && s != SubsetMask::single(u)) return false;
  return true;
}

}  // namespace

std::pair<SparseExtVec, SubsetMask> hit_constraint(const SparseExtVec& y, const MinorHandle& h,
                                                   ElementId u, ElementId v, int n_total,
                                                   bool paranoid) {
  if (paranoid) {
    contract_check(is_relaxed(y, u) && is_relaxed(y, v),
                   "hit_constraint: u and v must be relaxed");
    contract_check(minor_in_base_polytope(h, y.marginals(n_total)),
                   "hit_constraint: marginals outside the minor's base polytope");
  }
  MarginalVec x = y.marginals(n_total);
  TightSetResult tight = tight_set_min(h, x, u, v);

  const SubsetMask mu = SubsetMask::single(u), mv = SubsetMask::single(v);
  const Rat yu = y.get(mu), yv = y.get(mv);
  SparseExtVec out = y;
  if (yv < tight.delta) {
    out.set(mu, yu + yv);
    out.set(mv, Rat(0));
    return {out, mv};
  }
  out.set(mu, yu + tight.delta);
  out.set(mv, yv - tight.delta);
  return {out, tight.witness};
}

bool minor_in_base_polytope(const MinorHandle& h, const MarginalVec& x) {
  const SubsetMask np = h.restricted_to;
  const int n_eff = np.count();
  if (n_eff > 20)
    throw CapabilityError("minor base-polytope check capped at 20 elements");
  std::vector<ElementId> ids;
  np.for_each([&](ElementId w) { ids.push_back(w); });

  SubsetMask a;
  Rat x_sum(0);
  const uint64_t limit = uint64_t{1} << n_eff;
  for (uint64_t t = 1; t < limit; ++t) {
    const ElementId w = ids[static_cast<size_t>(__builtin_ctzll(t))];
    if (a.test(w)) {
      a.reset(w);
      x_sum -= x[w];
    } else {
      a.set(w);
      x_sum += x[w];
    }
    if (!rat_in_unit(x[w])) return false;
    if (x_sum > h.rank(a)) return false;
    if (a == np && x_sum != h.rank(a)) return false;
  }
  return true;
}

namespace {

struct PipageCtx {
  const IndependenceOracle* m = nullptr;
  ExtensionEvaluator ext;
  int n_total = 0;
  SparseExtVec y;
  SubsetMask relaxed;
  PipageOptions opts;
  PipageStats st;

  PipageCtx(const IndependenceOracle& matroid, const ValueOracle& f, int n,
            const PipageOptions& o)
      : m(&matroid), ext(f, o.ff_cap), n_total(n), opts(o) {}

  void note_ff(const char* where) {
    const int ff = y.ff();
    st.max_ff = std::max(st.max_ff, ff);
    contract_check(ff <= st.ff_budget,
                   std::string("pipage: ff budget exceeded after ") + where);
  }
};

SubsetMask fractional_relaxed_singletons(const PipageCtx& ctx, const SubsetMask& np) {
  SubsetMask s;
  (ctx.relaxed & np).for_each([&](ElementId u) {
    Rat p = ctx.y.get(SubsetMask::single(u));
    if (p > 0 && p < 1) s.set(u);
  });
  return s;
}

void pipage_recurse(PipageCtx& ctx, const MinorHandle& h, int depth) {
  ctx.st.max_recursion_depth = std::max(ctx.st.max_recursion_depth, depth);
  const SubsetMask np = h.restricted_to;

  for (;;) {
    MarginalVec marg = ctx.y.marginals(ctx.n_total);
    SubsetMask frac = marg.fractional() & np;
    if (frac.empty()) return;

    ctx.st.loop_iterations++;
    contract_check(ctx.st.loop_iterations <= 2 * ctx.n_total,
                   "pipage: loop iteration budget 2n exceeded");

    SubsetMask s = fractional_relaxed_singletons(ctx, np);
    while (s.count() < 2) {
      SubsetMask cand = frac - ctx.relaxed;
      contract_check(!cand.empty(),
                     "pipage: no unrelaxed fractional element available; the base-polytope "
                     "invariant should forbid this");
      const ElementId u = static_cast<ElementId>(cand.lowest());
      Rat f_before;
      if (ctx.opts.paranoid) f_before = ctx.ext.eval_F(ctx.y);
      SparseExtVec relaxed_y = relax_element(ctx.y, u, ctx.n_total);
      if (ctx.opts.paranoid) {
        contract_check(relaxed_y.marginals(ctx.n_total) == marg,
                       "pipage: relax changed the marginal vector");
        contract_check(ctx.ext.eval_F(relaxed_y) >= f_before, "pipage: relax decreased F");
      }
      ctx.y = std::move(relaxed_y);
      ctx.relaxed.set(u);
      ctx.st.relax_calls++;
      ctx.note_ff("relax");
      s = fractional_relaxed_singletons(ctx, np);
    }
    contract_check(s.count() == 2, "pipage: relaxed fractional set grew beyond two");

    const ElementId u = static_cast<ElementId>(s.lowest());
    const ElementId v = static_cast<ElementId>(s.next_above(static_cast<int>(u)));

    auto [y_plus, a_plus] = hit_constraint(ctx.y, h, u, v, ctx.n_total, ctx.opts.paranoid);
    auto [y_minus, a_minus] = hit_constraint(ctx.y, h, v, u, ctx.n_total, ctx.opts.paranoid);
    const Rat f_plus = ctx.ext.eval_F(y_plus);
    const Rat f_minus = ctx.ext.eval_F(y_minus);
    ctx.st.f_evaluations += 2;

    Rat f_prev;
    if (ctx.opts.paranoid) f_prev = ctx.ext.eval_F(ctx.y);

    SubsetMask c;
    if (f_plus >= f_minus) {
      ctx.y = std::move(y_plus);
      c = a_plus;
    } else {
      ctx.y = std::move(y_minus);
      c = a_minus;
    }
    ctx.note_ff("hit_constraint");
    if (ctx.opts.paranoid) {
      contract_check(std::max(f_plus, f_minus) >= f_prev,
                     "pipage: F decreased across a pipage step");
      contract_check(minor_in_base_polytope(h, ctx.y.marginals(ctx.n_total)),
                     "pipage: left the minor's base polytope");
    }

    const Rat yu = ctx.y.get(SubsetMask::single(u));
    const Rat yv = ctx.y.get(SubsetMask::single(v));
    if (yu > 0 && yu < 1 && yv > 0 && yv < 1) {
      if (2 * c.count() <= np.count())
        pipage_recurse(ctx, MinorHandle(*ctx.m, c, h.contracted_by), depth + 1);
      else
        pipage_recurse(ctx, MinorHandle(*ctx.m, np - c, h.contracted_by | c), depth + 1);
    }
  }
}

}  // namespace

SubsetMask deterministic_pipage(const IndependenceOracle& m, const ValueOracle& f,
                                SparseExtVec y, const SubsetMask& dummies, int n_total,
                                const PipageOptions& opts, PipageStats* stats) {
  PipageCtx ctx(m, f, n_total, opts);
  ctx.y = std::move(y);
  ctx.st.ff_initial = ctx.y.ff();
  ctx.st.ff_budget = ctx.st.ff_initial + 2 + ceil_log2(n_total);
  ctx.st.max_ff = ctx.st.ff_initial;

  if (opts.paranoid)
    contract_check(in_base_polytope(m, ctx.y.marginals(n_total)),
                   "pipage: input marginals must lie in the base polytope");

  MinorHandle top(m, m.ground(), SubsetMask{});
  pipage_recurse(ctx, top, 0);

  MarginalVec marg = ctx.y.marginals(n_total);
  contract_check(marg.integral(), "pipage: terminated with fractional marginals");
  SubsetMask winners = marg.ones();
  contract_check(m.independent(winners), "pipage: rounded set is not independent");
  if (stats) *stats = ctx.st;
  return winners - dummies;
}

}  // namespace submax
