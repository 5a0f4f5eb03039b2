#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "submax/bench.hpp"
#include "submax/pipeline.hpp"

namespace py = pybind11;
using namespace submax;

namespace {

SolveOptions make_options(const std::string& epsilon, const std::string& mode, uint64_t seed,
                          bool paranoid, bool with_opt, int ff_cap) {
  SolveOptions opts;
  try {
    opts.epsilon = rat_from_string(epsilon);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("epsilon: ") + e.what());
  }
  if (!(opts.epsilon > 0 && opts.epsilon <= 1))
    throw SchemaError("epsilon must be in (0, 1]");
  if (mode == "deterministic")
    opts.mode = SolveMode::Deterministic;
  else if (mode == "sampled-rounding")
    opts.mode = SolveMode::SampledRounding;
  else
    throw SchemaError("mode must be deterministic or sampled-rounding");
  opts.seed = seed;
  opts.paranoid = paranoid;
  opts.with_opt = with_opt;
  opts.ff_cap = ff_cap;
  return opts;
}

// Exceptions cross the binding as ValueError with the exit-code class name.
template <typename Fn>
auto guard(Fn&& fn) {
  try {
    return fn();
  } catch (const ToolError& e) {
    throw py::value_error(std::string(e.what()) + " [exit " + std::to_string(e.exit_code) +
                          "]");
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Deterministic submodular maximization toolkit (JSON-string API)";

  m.def(
      "solve_json",
      [](const std::string& instance, const std::string& epsilon, const std::string& mode,
         uint64_t seed, bool paranoid, bool with_opt, int ff_cap) {
        return guard([&] {
          return run_solve(Instance::from_string(instance),
                           make_options(epsilon, mode, seed, paranoid, with_opt, ff_cap))
              .dump();
        });
      },
      py::arg("instance"), py::arg("epsilon") = "1/2", py::arg("mode") = "deterministic",
      py::arg("seed") = 0, py::arg("paranoid") = false, py::arg("with_opt") = false,
      py::arg("ff_cap") = ExtensionEvaluator::kDefaultFfCap);

  m.def(
      "estimate_json",
      [](const std::string& instance, const std::string& epsilon, bool with_opt, int ff_cap) {
        return guard([&] {
          return run_estimate(Instance::from_string(instance),
                              make_options(epsilon, "deterministic", 0, false, with_opt,
                                           ff_cap))
              .dump();
        });
      },
      py::arg("instance"), py::arg("epsilon") = "1/2", py::arg("with_opt") = false,
      py::arg("ff_cap") = ExtensionEvaluator::kDefaultFfCap);

  m.def(
      "verify_jsonl",
      [](const std::string& instance, uint64_t seed) {
        return guard(
            [&] { return records_to_jsonl(run_verify(Instance::from_string(instance), seed)); });
      },
      py::arg("instance"), py::arg("seed") = 0);

  m.def(
      "bench_csv",
      [](const std::vector<std::string>& families, const std::vector<int>& n_list,
         const std::string& epsilon, int trials) {
        return guard([&] {
          BenchOptions opts;
          opts.families = families;
          opts.n_list = n_list;
          opts.epsilon = rat_from_string(epsilon);
          opts.trials = trials;
          return run_bench(opts);
        });
      },
      py::arg("families"), py::arg("n_list"), py::arg("epsilon") = "1/2",
      py::arg("trials") = 1);

  m.def(
      "brute_force_json",
      [](const std::string& instance) {
        return guard([&] {
          Instance inst = Instance::from_string(instance);
          BruteForceResult opt = brute_force_opt(inst.build_matroid(), inst.build_objective());
          nlohmann::json j{{"set", inst.names_of(opt.opt_set)},
                           {"value", rat_json(opt.opt_value)}};
          return j.dump();
        });
      },
      py::arg("instance"));

  m.def(
      "greedy_partition_json",
      [](const std::string& instance, int ell) {
        return guard([&] {
          AugmentedInstance a = augment(Instance::from_string(instance));
          Partition p = greedy_partition(a.m_plain, a.f_plain, ell);
          nlohmann::json parts = nlohmann::json::array();
          for (const SubsetMask& t : p.parts)
            parts.push_back(nlohmann::json{{"elements", a.inst.names_of(t - a.dummies)},
                                           {"dummy_count", (t & a.dummies).count()},
                                           {"value", rat_json(a.f_plain(t))}});
          return nlohmann::json{{"parts", parts}}.dump();
        });
      },
      py::arg("instance"), py::arg("ell") = 1);
}
