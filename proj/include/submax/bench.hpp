#pragma once

#include <string>
#include <vector>

#include "submax/pipeline.hpp"

namespace submax {

// Deterministic synthetic families for query-count sweeps. The instance for
// a given (family, n) is a pure function of those arguments, so repeated
// trials must produce identical query counts.
Instance bench_instance(const std::string& family, int n);

struct BenchOptions {
  std::vector<std::string> families;  // "coverage-uniform", "cut-partition"
  std::vector<int> n_list;
  Rat epsilon = Rat(1, 2);
  int trials = 1;
};

// CSV with header n,r,eps,phase,value_queries,independence_queries,wall_ms.
// One row per (family instance, trial, phase); the only phase run is the
// fractional solve, whose ledger the sweep is about.
std::string run_bench(const BenchOptions& opts);

}  // namespace submax
