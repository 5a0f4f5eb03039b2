#include "submax/pipeline.hpp"

#include <chrono>

namespace submax {

using nlohmann::json;

json rat_json(const Rat& q) {
  return json{{"rat", rat_str(q)}, {"approx", rat_d(q)}};
}

AugmentedInstance augment(const Instance& inst) {
  AugmentedInstance a;
  a.inst = inst;
  a.n = inst.n();
  a.f_base = inst.build_objective();
  a.m_base = inst.build_matroid();
  a.rank = a.m_base.has_closed_rank() ? a.m_base.closed_rank(a.m_base.ground())
                                      : rank_greedy(a.m_base, a.m_base.ground());
  a.n_total = a.n + a.rank;
  if (a.n_total > SubsetMask::kMaxElements)
    throw SchemaError("instance: element count plus rank (" + std::to_string(a.n_total) +
                      ") exceeds the 128-bit ground-set limit");
  a.ground = SubsetMask::first_n(a.n);
  a.dummies = SubsetMask::range(a.n, a.n_total);
  a.f_plain = with_dummies(a.f_base, a.dummies);
  a.m_plain = extend_with_dummies(a.m_base, a.dummies);
  a.ledger = std::make_shared<QueryLedger>();
  a.f_counted = counted(a.f_plain, a.ledger);
  a.m_counted = counted(a.m_plain, a.ledger);
  return a;
}

namespace {

struct PhaseTimer {
  json phases = json::array();
  QueryLedger::Snapshot last;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void mark(const std::string& phase, const LedgerPtr& ledger) {
    auto now = std::chrono::steady_clock::now();
    auto snap = ledger->snapshot();
    double ms = std::chrono::duration<double, std::milli>(now - t0).count();
    phases.push_back(json{{"phase", phase},
                          {"value_queries", snap.value - last.value},
                          {"independence_queries", snap.independence - last.independence},
                          {"wall_ms", ms}});
    last = snap;
    t0 = now;
  }
};

json instance_header(const AugmentedInstance& a, const char* command,
                     const SolveOptions& opts, const McgTrace& trace) {
  json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["instance"] = json{{"name", a.inst.name},
                       {"n", a.n},
                       {"rank", a.rank},
                       {"monotone", a.inst.monotone()}};
  j["epsilon"] = json{{"requested", rat_str(opts.epsilon)},
                      {"effective", rat_str(trace.eps_effective)},
                      {"delta", rat_str(trace.delta)},
                      {"ell", trace.ell},
                      {"iterations", trace.iterations}};
  return j;
}

json fractional_summary(const AugmentedInstance& a, const McgTrace& trace) {
  json support = json::array();
  for (const auto& [s, p] : trace.y_final.entries()) {
    json names = json::array();
    s.for_each([&](ElementId u) {
      if (static_cast<int>(u) < a.n)
        names.push_back(a.inst.elements[u]);
      else
        names.push_back("~dummy" + std::to_string(u - a.n));
    });
    support.push_back(json{{"set", names}, {"p", rat_str(p)}});
  }
  return json{{"value", rat_json(trace.value_final)},
              {"supp", trace.y_final.supp()},
              {"ff", trace.y_final.ff()},
              {"support", support}};
}

void attach_opt(json& report, const AugmentedInstance& a, const Rat& achieved) {
  if (a.n > 14)
    throw CapabilityError("--with-opt: brute force is capped at n <= 14, instance has n = " +
                          std::to_string(a.n));
  BruteForceResult opt = brute_force_opt(a.m_base, a.f_base);
  json o;
  o["value"] = rat_json(opt.opt_value);
  o["set"] = a.inst.names_of(opt.opt_set);
  if (opt.opt_value > 0) o["ratio"] = rat_json(achieved / opt.opt_value);
  report["opt"] = o;
}

}  // namespace

json run_estimate(const Instance& inst, const SolveOptions& opts) {
  AugmentedInstance a = augment(inst);
  PhaseTimer timer;
  McgTrace trace = measured_continuous_greedy(a.m_counted, a.f_counted, a.f_plain,
                                              opts.epsilon, a.dummies, a.n_total, opts.ff_cap);
  timer.mark("mcg", a.ledger);

  ExtensionEvaluator ext_counted(a.f_counted, opts.ff_cap);
  Rat v = ext_counted.eval_F(trace.y_final);
  contract_check(v == trace.value_final, "estimate: counted and plain evaluations disagree");
  timer.mark("estimate", a.ledger);

  json report = instance_header(a, "estimate", opts, trace);
  report["estimate"] = rat_json(v);
  report["fractional"] = fractional_summary(a, trace);
  if (opts.with_opt) attach_opt(report, a, v);
  report["queries"] = json{{"phases", timer.phases},
                           {"total_value", a.ledger->snapshot().value},
                           {"total_independence", a.ledger->snapshot().independence}};
  return report;
}

json run_solve(const Instance& inst, const SolveOptions& opts) {
  AugmentedInstance a = augment(inst);
  PhaseTimer timer;
  McgTrace trace = measured_continuous_greedy(a.m_counted, a.f_counted, a.f_plain,
                                              opts.epsilon, a.dummies, a.n_total, opts.ff_cap);
  timer.mark("mcg", a.ledger);

  json report = instance_header(a, "solve", opts, trace);
  report["mode"] = opts.mode == SolveMode::Deterministic ? "deterministic" : "sampled-rounding";
  report["seed"] = opts.seed;
  report["fractional"] = fractional_summary(a, trace);

  if (opts.mode == SolveMode::Deterministic) {
    SparseExtVec lifted = lift_to_base_polytope(trace.y_final, a.m_plain, a.dummies, a.n_total);
    timer.mark("lift", a.ledger);

    PipageOptions popts;
    popts.paranoid = opts.paranoid;
    popts.ff_cap = opts.ff_cap;
    PipageStats stats;
    SubsetMask solution = deterministic_pipage(a.m_counted, a.f_counted, lifted, a.dummies,
                                               a.n_total, popts, &stats);
    timer.mark("round", a.ledger);

    const Rat value = a.f_base(solution);
    contract_check(value >= trace.value_final, "solve: rounding lost value");
    contract_check(a.m_base.independent(solution), "solve: rounded set not independent");
    report["solution"] = json{{"elements", a.inst.names_of(solution)},
                              {"value", rat_json(value)},
                              {"lossless", value >= trace.value_final}};
    report["rounding"] = json{{"loop_iterations", stats.loop_iterations},
                              {"relax_calls", stats.relax_calls},
                              {"f_evaluations", stats.f_evaluations},
                              {"ff_initial", stats.ff_initial},
                              {"max_ff", stats.max_ff},
                              {"ff_budget", stats.ff_budget},
                              {"max_recursion_depth", stats.max_recursion_depth}};
    if (opts.with_opt) attach_opt(report, a, value);
  } else {
    Decomposition decomp = random_decomposition(trace, opts.seed);
    timer.mark("decompose", a.ledger);

    json sets = json::array();
    Rat best_value(-1);
    SubsetMask best_set;
    ExtensionEvaluator ext_counted(a.f_counted, opts.ff_cap);
    for (const SubsetMask& s : decomp.sets) {
      Rat v = a.f_counted(s);
      if (v > best_value) {
        best_value = v;
        best_set = s - a.dummies;
      }
      sets.push_back(json{{"elements", a.inst.names_of(s - a.dummies)},
                          {"dummy_count", (s & a.dummies).count()},
                          {"value", rat_json(v)}});
    }
    MarginalVec marg = trace.y_final.marginals(a.n_total);
    double sampled =
        ext_counted.eval_Fbar_sample(marg, opts.sample_count, opts.seed ^ 0x5bd1e995u);
    timer.mark("sample", a.ledger);

    json x = json::object();
    for (int u = 0; u < a.n; ++u)
      x[a.inst.elements[static_cast<size_t>(u)]] =
          rat_str(decomp.x[static_cast<ElementId>(u)]);
    report["solution"] = json{{"elements", a.inst.names_of(best_set)},
                              {"value", rat_json(a.f_base(best_set))},
                              {"rule", "best decomposition set"}};
    report["decomposition"] = json{{"sets", sets},
                                   {"x", x},
                                   {"sampled_extension_mean", sampled},
                                   {"samples", opts.sample_count}};
    if (opts.with_opt) attach_opt(report, a, a.f_base(best_set));
  }

  report["queries"] = json{{"phases", timer.phases},
                           {"total_value", a.ledger->snapshot().value},
                           {"total_independence", a.ledger->snapshot().independence}};
  return report;
}

std::vector<CheckRecord> run_verify(const Instance& inst, uint64_t seed) {
  AugmentedInstance a = augment(inst);
  const std::string id = inst.name.empty() ? "instance" : inst.name;

  std::vector<CheckRecord> out = property_suite(a.f_base, a.m_base, a.n, seed, id);

  if (a.n <= 14) {
    BruteForceResult opt = brute_force_opt(a.m_base, a.f_base);
    for (int ell : {1, 2}) {
      Partition p = greedy_partition(a.m_plain, a.f_plain, ell);
      auto recs = check_partition_guarantee(p, opt, a.f_plain, ell, PartitionVariant::Exact,
                                            Rat(0), inst.monotone(), id);
      out.insert(out.end(), recs.begin(), recs.end());
      Partition tp =
          threshold_greedy_partition(a.m_plain, a.f_plain, ell, Rat(1, 2), a.dummies);
      auto trecs = check_partition_guarantee(tp, opt, a.f_plain, ell,
                                             PartitionVariant::Thresholded, Rat(1, 2),
                                             inst.monotone(), id);
      out.insert(out.end(), trecs.begin(), trecs.end());
    }

    std::vector<Rat> eps_values{Rat(1)};
    if (a.n <= 8) eps_values.push_back(Rat(1, 2));
    for (const Rat& eps : eps_values) {
      McgTrace trace = measured_continuous_greedy(a.m_counted, a.f_counted, a.f_plain, eps,
                                                  a.dummies, a.n_total);
      auto recs = check_mcg_trace(trace, opt, a.f_plain, a.m_plain, id);
      out.insert(out.end(), recs.begin(), recs.end());
    }
  }
  return out;
}

}  // namespace submax
