#include "submax/verify.hpp"

#include <sstream>

#include "submax/rng.hpp"

namespace submax {

using nlohmann::json;

BruteForceResult brute_force_opt(const IndependenceOracle& m, const ValueOracle& f) {
  const SubsetMask ground = m.ground();
  const int n = ground.count();
  if (n > 20)
    throw CapabilityError("brute_force_opt: " + std::to_string(n) +
                          " ground elements exceed the exhaustive cap of 20");
  std::vector<ElementId> ids;
  ground.for_each([&](ElementId u) { ids.push_back(u); });

  BruteForceResult best{SubsetMask{}, f(SubsetMask{})};
  const uint64_t limit = uint64_t{1} << n;
  for (uint64_t bits = 1; bits < limit; ++bits) {
    SubsetMask s;
    for (int i = 0; i < n; ++i)
      if ((bits >> i) & 1) s.set(ids[i]);
    if (!m.independent(s)) continue;
    Rat v = f(s);
    if (v > best.opt_value) best = {s, v};
  }
  return best;
}

json record_to_json(const CheckRecord& r) {
  return json{{"check", r.check},
              {"instance_id", r.instance_id},
              {"params", r.params},
              {"pass", r.pass},
              {"slack_num", r.slack.get_num().get_str()},
              {"slack_den", r.slack.get_den().get_str()}};
}

std::string records_to_jsonl(const std::vector<CheckRecord>& rs) {
  std::ostringstream out;
  for (const CheckRecord& r : rs) out << record_to_json(r).dump() << "\n";
  return out.str();
}

bool all_pass(const std::vector<CheckRecord>& rs) {
  for (const CheckRecord& r : rs)
    if (!r.pass) return false;
  return true;
}

namespace {

CheckRecord ineq(const std::string& check, const std::string& id, json params, const Rat& lhs,
                 const Rat& rhs) {
  CheckRecord r;
  r.check = check;
  r.instance_id = id;
  r.params = std::move(params);
  r.slack = lhs - rhs;
  r.pass = r.slack >= 0;
  return r;
}

CheckRecord eq(const std::string& check, const std::string& id, json params, const Rat& lhs,
               const Rat& rhs) {
  CheckRecord r;
  r.check = check;
  r.instance_id = id;
  r.params = std::move(params);
  r.slack = lhs - rhs;
  r.pass = lhs == rhs;
  return r;
}

CheckRecord flag(const std::string& check, const std::string& id, json params, bool ok) {
  CheckRecord r;
  r.check = check;
  r.instance_id = id;
  r.params = std::move(params);
  r.pass = ok;
  r.slack = ok ? Rat(0) : Rat(-1);
  return r;
}

}  // namespace

std::vector<CheckRecord> check_partition_guarantee(const Partition& partition,
                                                   const BruteForceResult& opt,
                                                   const ValueOracle& f, int ell,
                                                   PartitionVariant variant, const Rat& eps,
                                                   bool monotone,
                                                   const std::string& instance_id) {
  const Rat empty_value = f(SubsetMask{});
  Rat marginal_sum(0), value_sum(0);
  for (const SubsetMask& part : partition.parts) {
    Rat v = f(part);
    value_sum += v;
    marginal_sum += v - empty_value;
  }

  const bool thresholded = variant == PartitionVariant::Thresholded;
  Rat coeff = 1 - Rat(1, ell);
  if (thresholded) coeff -= eps;
  Rat bound = coeff * opt.opt_value - value_sum / ell;
  if (bound < 0) bound = 0;

  json params{{"ell", ell},
              {"variant", thresholded ? "thresholded" : "exact"},
              {"eps", rat_str(eps)},
              {"opt", rat_str(opt.opt_value)}};

  std::vector<CheckRecord> out;
  out.push_back(
      ineq("partition-guarantee-general", instance_id, params, marginal_sum, bound));
  out.push_back(ineq("partition-marginals-nonnegative", instance_id, params, marginal_sum,
                     Rat(0)));
  if (monotone) {
    Rat mono_coeff = thresholded ? (1 - eps) : Rat(1);
    Rat mono_bound = mono_coeff * opt.opt_value - value_sum / ell;
    if (mono_bound < 0) mono_bound = 0;
    out.push_back(
        ineq("partition-guarantee-monotone", instance_id, params, marginal_sum, mono_bound));
  }
  return out;
}

std::vector<CheckRecord> check_mcg_trace(const McgTrace& trace, const BruteForceResult& opt,
                                         const ValueOracle& f_plain,
                                         const IndependenceOracle& m_plain,
                                         const std::string& instance_id) {
  std::vector<CheckRecord> out;
  ExtensionEvaluator ext(f_plain, ExtensionEvaluator::kDefaultFfCap + 8);
  const Rat eps = trace.eps_effective;
  const Rat delta = trace.delta;
  const Rat one_minus_delta = 1 - delta;

  Rat value_prev = ext.eval_F(SparseExtVec::zero());  // f(empty)
  const bool monotone = f_plain.monotone();

  for (const McgIteration& step : trace.steps) {
    json params{{"i", step.i}, {"eps", rat_str(eps)}};

    // One-step recursion against the optimum.
    const Rat g_opt = ext.eval_g(step.y_before, opt.opt_set);
    const Rat lhs_rec = (step.value_after - value_prev) / delta;
    const Rat rhs_rec = (1 - 4 * eps) * g_opt - value_prev;
    out.push_back(ineq("mcg-step-recursion", instance_id, params, lhs_rec, rhs_rec));

    // Per-call partition bound in extension space.
    Rat gain_sum(0);
    for (const SubsetMask& part : step.parts)
      gain_sum += ext.eval_g(step.y_before, part) - value_prev;
    const Rat rhs_parts = (1 - 3 * eps) * g_opt - (1 - eps) * value_prev;
    out.push_back(ineq("mcg-partition-bound", instance_id, params, gain_sum, rhs_parts));

    // Trajectory value lower bounds.
    const Rat decay_prev = rat_pow(one_minus_delta, static_cast<unsigned long>(step.i - 1));
    const Rat general_bound =
        delta * step.i * decay_prev * (1 - 4 * eps) * opt.opt_value;
    out.push_back(
        ineq("mcg-value-lower-bound", instance_id, params, step.value_after, general_bound));
    if (monotone) {
      const Rat mono_bound =
          (1 - decay_prev * one_minus_delta) * (1 - 4 * eps) * opt.opt_value;
      out.push_back(ineq("mcg-value-lower-bound-monotone", instance_id, params,
                         step.value_after, mono_bound));
    }

    // Support and marginal-norm bounds.
    out.push_back(ineq("mcg-support-bound", instance_id, params,
                       Rat(trace.ell) * step.i, Rat(step.y_after.supp())));
    const Rat norm = step.y_after.marginals(trace.n_total).max_coord();
    out.push_back(ineq("mcg-marginal-norm-bound", instance_id, params,
                       1 - decay_prev * one_minus_delta, norm));

    value_prev = step.value_after;
  }

  bool in_polytope = in_matroid_polytope(m_plain, trace.y_final.marginals(trace.n_total));
  out.push_back(flag("mcg-marginals-in-polytope", instance_id,
                     json{{"eps", rat_str(eps)}}, in_polytope));
  out.push_back(ineq("mcg-estimate-below-opt", instance_id, json{{"eps", rat_str(eps)}},
                     opt.opt_value, trace.value_final));
  return out;
}

namespace {

SparseExtVec random_ext_vec(Rng& rng, int n, int max_keys, bool allow_integral = true) {
  SparseExtVec y;
  const int keys = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_keys)));
  for (int i = 0; i < keys; ++i) {
    SubsetMask s;
    for (int u = 0; u < n; ++u)
      if (rng.below(3) == 0) s.set(static_cast<ElementId>(u));
    if (s.empty()) s.set(static_cast<ElementId>(rng.below(static_cast<uint64_t>(n))));
    int num = rng.int_in(1, allow_integral ? 16 : 15);
    y.set(s, Rat(num, 16));
  }
  return y;
}

}  // namespace

std::vector<CheckRecord> property_suite(const ValueOracle& f, const IndependenceOracle& m,
                                        int n, uint64_t seed, const std::string& instance_id) {
  std::vector<CheckRecord> out;
  Rng rng(seed);
  ExtensionEvaluator ext(f, ExtensionEvaluator::kDefaultFfCap);
  const SubsetMask ground = SubsetMask::first_n(n);

  auto random_subset = [&](const SubsetMask& within) {
    SubsetMask s;
    within.for_each([&](ElementId u) {
      if (rng.below(2)) s.set(u);
    });
    return s;
  };

  // Objective sanity: non-negativity and diminishing returns on random draws.
  {
    bool nonneg = true, submodular = true;
    for (int t = 0; t < 200; ++t) {
      SubsetMask s = random_subset(ground);
      if (f(s) < 0) nonneg = false;
      SubsetMask bigger = s | random_subset(ground);
      SubsetMask rest = ground - bigger;
      if (rest.empty()) continue;
      std::vector<ElementId> ids;
      rest.for_each([&](ElementId u) { ids.push_back(u); });
      ElementId u = ids[rng.below(ids.size())];
      SubsetMask su = s, bu = bigger;
      su.set(u);
      bu.set(u);
      if (f(su) - f(s) < f(bu) - f(bigger)) submodular = false;
    }
    out.push_back(flag("objective-nonnegative", instance_id, json::object(), nonneg));
    out.push_back(flag("objective-submodular-sample", instance_id, json::object(), submodular));
  }

  // Extension identities on random sparse vectors.
  for (int t = 0; t < 24; ++t) {
    json params{{"draw", t}};
    SparseExtVec y = random_ext_vec(rng, n, 5);
    const Rat f_y = ext.eval_F(y);

    if (!y.entries().empty()) {
      // Multilinearity in a random key.
      auto it = y.entries().begin();
      std::advance(it, static_cast<long>(rng.below(y.entries().size())));
      const SubsetMask s = it->first;
      const Rat p = it->second;
      SparseExtVec y0 = y, y1 = y;
      y0.set(s, Rat(0));
      y1.set(s, Rat(1));
      out.push_back(eq("extension-multilinearity", instance_id, params,
                       (1 - p) * ext.eval_F(y0) + p * ext.eval_F(y1), f_y));
      out.push_back(eq("extension-derivative-identity", instance_id, params,
                       (1 - p) * ext.partial_wrt(y, s), ext.eval_g(y, s) - f_y));
    }

    // Probabilistic-sum expansion against explicit enumeration.
    {
      SparseExtVec z = random_ext_vec(rng, n, 3);
      std::vector<std::pair<SubsetMask, Rat>> zkeys(z.entries().begin(), z.entries().end());
      Rat expansion(0);
      const uint64_t limit = uint64_t{1} << zkeys.size();
      for (uint64_t bits = 0; bits < limit; ++bits) {
        SparseExtVec joined = y;
        Rat w(1);
        for (size_t i = 0; i < zkeys.size(); ++i) {
          if ((bits >> i) & 1) {
            joined.set(zkeys[i].first, Rat(1));
            w *= zkeys[i].second;
          } else {
            w *= 1 - zkeys[i].second;
          }
        }
        expansion += w * ext.eval_F(joined);
      }
      out.push_back(eq("extension-psum-expansion", instance_id, params,
                       ext.eval_F(y.psum(z)), expansion));
    }

    // Standard extension of the marginals dominates F.
    out.push_back(ineq("extension-marginal-domination", instance_id, params,
                       ext.eval_Fbar_exact(y.marginals(n)), f_y));

    // Joining any set keeps at least the undamaged share of its value.
    {
      const Rat norm = y.marginals(n).max_coord();
      SubsetMask s = random_subset(ground);
      out.push_back(ineq("extension-join-lower-bound", instance_id, params,
                         ext.eval_g(y, s), (1 - norm) * f(s)));
    }

    // Convexity along the difference of two singleton coordinates: a
    // symmetric step in both directions cannot drop below the midpoint.
    {
      ElementId u = static_cast<ElementId>(rng.below(static_cast<uint64_t>(n)));
      ElementId v = static_cast<ElementId>(rng.below(static_cast<uint64_t>(n)));
      if (u != v) {
        const SubsetMask mu = SubsetMask::single(u), mv = SubsetMask::single(v);
        const Rat yu = y.get(mu), yv = y.get(mv);
        Rat t_step = 1 - yu;
        if (yv < t_step) t_step = yv;
        if (yu < t_step) t_step = yu;
        if (Rat(1 - yv) < t_step) t_step = 1 - yv;
        if (t_step > 0) {
          SparseExtVec fwd = y, back = y;
          fwd.set(mu, yu + t_step);
          fwd.set(mv, yv - t_step);
          back.set(mu, yu - t_step);
          back.set(mv, yv + t_step);
          out.push_back(ineq("extension-directional-convexity", instance_id, params,
                             (ext.eval_F(fwd) + ext.eval_F(back)) / 2, f_y));
        }
      }
    }

    // Relax: marginals preserved, F non-decreasing, ff grows by at most one.
    {
      ElementId u = static_cast<ElementId>(rng.below(static_cast<uint64_t>(n)));
      SparseExtVec z = relax_element(y, u, n);
      out.push_back(flag("relax-preserves-marginals", instance_id, params,
                         z.marginals(n) == y.marginals(n)));
      out.push_back(ineq("relax-value-non-decreasing", instance_id, params, ext.eval_F(z),
                         f_y));
      out.push_back(ineq("relax-ff-growth", instance_id, params, Rat(y.ff() + 1),
                         Rat(z.ff())));
    }

    // Marginal algebra: marg(y (+) z) = marg(y) (+) marg(z).
    {
      SparseExtVec z = random_ext_vec(rng, n, 3);
      out.push_back(flag("psum-marginal-identity", instance_id, params,
                         y.psum(z).marginals(n) == y.marginals(n).psum(z.marginals(n))));
    }
  }

  // End-to-end: greedy fractional solve, lift, pipage, all bounds exact.
  {
    auto ledger = std::make_shared<QueryLedger>();
    const int rank = m.has_closed_rank() ? m.closed_rank(ground) : rank_greedy(m, ground);
    const SubsetMask dummies = SubsetMask::range(n, n + rank);
    const int n_total = n + rank;
    ValueOracle f_dummy = with_dummies(f, dummies);
    IndependenceOracle m_dummy = extend_with_dummies(m, dummies);
    ValueOracle f_counted = counted(f_dummy, ledger);
    IndependenceOracle m_counted = counted(m_dummy, ledger);

    McgTrace trace =
        measured_continuous_greedy(m_counted, f_counted, f_dummy, Rat(1), dummies, n_total);
    json params{{"eps", "1"}};

    out.push_back(flag("pipeline-marginals-in-polytope", instance_id, params,
                       in_matroid_polytope(m_dummy, trace.y_final.marginals(n_total))));

    const auto before_decomp = ledger->snapshot();
    Decomposition decomp = random_decomposition(trace, /*seed=*/seed ^ 0x9e3779b9u);
    const auto after_decomp = ledger->snapshot();
    out.push_back(flag("decomposition-zero-queries", instance_id, params,
                       before_decomp.value == after_decomp.value &&
                           before_decomp.independence == after_decomp.independence));
    bool sets_independent = true;
    for (const SubsetMask& s : decomp.sets)
      if (!m_dummy.independent(s)) sets_independent = false;
    out.push_back(flag("decomposition-sets-independent", instance_id, params,
                       sets_independent));
    bool mean_matches = true;
    MarginalVec marg_final = trace.y_final.marginals(n_total);
    for (int u = 0; u < n_total; ++u)
      if (decomposition_mean(trace, static_cast<ElementId>(u)) !=
          marg_final[static_cast<ElementId>(u)])
        mean_matches = false;
    out.push_back(
        flag("decomposition-mean-identity", instance_id, params, mean_matches));

    SparseExtVec lifted = lift_to_base_polytope(trace.y_final, m_dummy, dummies, n_total);
    ExtensionEvaluator ext_plain(f_dummy);
    out.push_back(eq("lift-preserves-value", instance_id, params, ext_plain.eval_F(lifted),
                     trace.value_final));

    PipageStats stats;
    SubsetMask rounded = deterministic_pipage(m_counted, f_counted, lifted, dummies, n_total,
                                              PipageOptions{}, &stats);
    out.push_back(flag("rounding-solution-independent", instance_id, params,
                       m.independent(rounded)));
    out.push_back(ineq("rounding-lossless", instance_id, params, f(rounded),
                       trace.value_final));
    out.push_back(ineq("rounding-iteration-budget", instance_id, params,
                       Rat(2 * n_total), Rat(stats.loop_iterations)));
  }

  return out;
}

}  // namespace submax
