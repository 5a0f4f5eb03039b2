#pragma once

#include <gmpxx.h>

#include <string>

namespace submax {

// Exact rational arithmetic everywhere on the probability/value path. All
// comparisons made by the algorithms are exact; doubles appear only in the
// sampling estimator and in report "approx" fields.
using Rat = mpq_class;

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double rat_d(const Rat& q) { return q.get_d(); }

// Parses "3", "-1/2", "7/8". Throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

Rat rat_pow(const Rat& base, unsigned long e);

inline bool rat_in_unit(const Rat& q) { return q >= 0 && q <= 1; }

}  // namespace submax
