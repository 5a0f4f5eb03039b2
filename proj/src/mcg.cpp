#include "submax/mcg.hpp"

#include "submax/rng.hpp"

namespace submax {

McgTrace measured_continuous_greedy(const IndependenceOracle& m, const ValueOracle& f,
                                    const ValueOracle& f_plain, const Rat& eps,
                                    const SubsetMask& dummies, int n_total, int ff_cap) {
  contract_check(eps > 0 && eps <= 1, "measured_continuous_greedy: eps must be in (0,1]");

  // Replace eps by 1/ceil(1/eps) so all loop counts are integers.
  mpz_class inv_l_z = (eps.get_den() + eps.get_num() - 1) / eps.get_num();
  mpz_class supp_bound = inv_l_z * inv_l_z * inv_l_z * inv_l_z;
  if (supp_bound > ff_cap)
    throw CapabilityError(
        "measured_continuous_greedy: projected ff(y) bound " + supp_bound.get_str() +
        " = (1/eps)^4 exceeds the enumeration cap " + std::to_string(ff_cap) +
        "; use a larger eps or raise the cap");
  const long inv_l = static_cast<long>(inv_l_z.get_si());

  McgTrace trace;
  trace.eps_input = eps;
  trace.eps_effective = Rat(1, inv_l);
  trace.delta = rat_pow(trace.eps_effective, 3);
  trace.ell = inv_l;
  trace.iterations = inv_l * inv_l * inv_l;
  trace.n_total = n_total;
  trace.dummies = dummies;

  ExtensionEvaluator ext(f, ff_cap);
  ExtensionEvaluator ext_plain(f_plain, ff_cap);

  SparseExtVec y;
  for (long i = 1; i <= trace.iterations; ++i) {
    ValueOracle g([&ext, y](const SubsetMask& s) { return ext.eval_g(y, s); }, f.monotone());
    Partition part = threshold_greedy_partition(m, g, static_cast<int>(inv_l),
                                                trace.eps_effective, dummies);

    SparseExtVec step;
    for (const SubsetMask& tj : part.parts)
      if (!tj.empty()) step.set(tj, trace.delta);
    SparseExtVec y_next = y.psum(step);

    McgIteration rec;
    rec.i = static_cast<int>(i);
    rec.parts = part.parts;
    rec.united = part.united;
    rec.y_before = y;
    rec.y_after = y_next;
    rec.value_after = ext_plain.eval_F(y_next);
    trace.steps.push_back(std::move(rec));
    y = std::move(y_next);
  }

  trace.y_final = y;
  trace.value_final =
      trace.steps.empty() ? ext_plain.eval_F(y) : trace.steps.back().value_after;
  return trace;
}

Decomposition random_decomposition(const McgTrace& trace, uint64_t seed) {
  Rng rng(seed);
  Decomposition out;
  out.x = MarginalVec(trace.n_total);

  std::vector<unsigned long> earlier(static_cast<size_t>(trace.n_total), 0);
  std::vector<long> hits(static_cast<size_t>(trace.n_total), 0);
  const Rat keep_base = 1 - trace.delta;
  for (const McgIteration& step : trace.steps) {
    SubsetMask s;
    step.united.for_each([&](ElementId u) {
      if (rng.bernoulli(rat_pow(keep_base, earlier[u]))) {
        s.set(u);
        hits[u]++;
      }
    });
    step.united.for_each([&](ElementId u) { earlier[u]++; });
    out.sets.push_back(s);
  }
  for (int u = 0; u < trace.n_total; ++u)
    out.x.set(static_cast<ElementId>(u), trace.delta * hits[u]);
  return out;
}

Rat decomposition_mean(const McgTrace& trace, ElementId u) {
  Rat total(0);
  unsigned long earlier = 0;
  const Rat keep_base = 1 - trace.delta;
  for (const McgIteration& step : trace.steps) {
    if (step.united.test(u)) {
      total += trace.delta * rat_pow(keep_base, earlier);
      earlier++;
    }
  }
  return total;
}

}  // namespace submax
