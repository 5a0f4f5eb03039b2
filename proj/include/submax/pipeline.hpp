#pragma once

#include "submax/instance.hpp"
#include "submax/mcg.hpp"
#include "submax/rounding.hpp"
#include "submax/verify.hpp"

namespace submax {

// Instance plus the dummy-extended oracles every pipeline stage consumes.
// The counted pair shares one ledger; the plain pair is for instrumentation
// and verification so reported query counts stay algorithmic.
struct AugmentedInstance {
  Instance inst;
  int n = 0;
  int rank = 0;
  int n_total = 0;
  SubsetMask ground;   // original elements
  SubsetMask dummies;  // ids [n, n+rank)
  ValueOracle f_base;  // original objective
  IndependenceOracle m_base;
  ValueOracle f_plain;  // dummy-extended, uncounted
  IndependenceOracle m_plain;
  LedgerPtr ledger;
  ValueOracle f_counted;
  IndependenceOracle m_counted;
};

AugmentedInstance augment(const Instance& inst);

enum class SolveMode { Deterministic, SampledRounding };

struct SolveOptions {
  Rat epsilon = Rat(1, 2);
  SolveMode mode = SolveMode::Deterministic;
  uint64_t seed = 0;
  bool paranoid = false;
  bool with_opt = false;
  int ff_cap = ExtensionEvaluator::kDefaultFfCap;
  long sample_count = 100000;  // sampled mode estimate of the standard extension
};

nlohmann::json run_solve(const Instance& inst, const SolveOptions& opts);
nlohmann::json run_estimate(const Instance& inst, const SolveOptions& opts);

// Property suite plus guarantee checks; one JSONL record per inequality.
std::vector<CheckRecord> run_verify(const Instance& inst, uint64_t seed);

nlohmann::json rat_json(const Rat& q);

}  // namespace submax
