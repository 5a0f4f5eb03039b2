#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "submax/mcg.hpp"
#include "submax/rounding.hpp"

namespace submax {

struct BruteForceResult {
  SubsetMask opt_set;
  Rat opt_value;
};

// Exhaustive maximum of f over independent sets; ties go to the smallest
// bitmask. Capped at 20 ground elements.
BruteForceResult brute_force_opt(const IndependenceOracle& m, const ValueOracle& f);

// One checked inequality instance. slack = LHS - RHS of the inequality in
// the ">= 0" orientation, so pass == (slack >= 0) for inequality checks.
struct CheckRecord {
  std::string check;
  std::string instance_id;
  nlohmann::json params;
  bool pass = false;
  Rat slack = Rat(0);
};

nlohmann::json record_to_json(const CheckRecord& r);
std::string records_to_jsonl(const std::vector<CheckRecord>& rs);
bool all_pass(const std::vector<CheckRecord>& rs);

enum class PartitionVariant { Exact, Thresholded };

// Checks the partition-greedy guarantee for a finished run:
//   sum_j f(T_j | empty) >= max{ c * f(OPT) - (1/ell) sum_j f(T_j), 0 }
// with c = 1 - 1/ell (exact) or 1 - 1/ell - eps (thresholded), improving to
// 1 (exact) or 1 - eps (thresholded) for monotone objectives.
std::vector<CheckRecord> check_partition_guarantee(const Partition& partition,
                                                   const BruteForceResult& opt,
                                                   const ValueOracle& f, int ell,
                                                   PartitionVariant variant, const Rat& eps,
                                                   bool monotone,
                                                   const std::string& instance_id);

// Evaluates the per-iteration inequalities of a continuous-greedy trace
// exactly: the one-step recursion against OPT, the per-call partition bound,
// the trajectory value lower bounds, and the support/marginal-norm bounds.
std::vector<CheckRecord> check_mcg_trace(const McgTrace& trace, const BruteForceResult& opt,
                                         const ValueOracle& f_plain,
                                         const IndependenceOracle& m_plain,
                                         const std::string& instance_id);

// Randomized invariant suite over one instance: extension identities,
// relax/rounding behavior, trace bounds and the query-free decomposition,
// all deterministic in the seed.
std::vector<CheckRecord> property_suite(const ValueOracle& f, const IndependenceOracle& m,
                                        int n, uint64_t seed, const std::string& instance_id);

}  // namespace submax
