#pragma once

#include <cstdint>
#include <random>

#include "submax/rational.hpp"

namespace submax {

// Deterministic RNG helpers. std::mt19937_64's output sequence is pinned by
// the standard; the distribution adapters are not, so we only ever consume
// raw 64-bit words here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Uniform in [0, m). Modulo bias is < m / 2^64, irrelevant for test draws.
  uint64_t below(uint64_t m) { return m == 0 ? 0 : next() % m; }

  int int_in(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Exact Bernoulli(p) for rational p in [0,1]: compares a uniform 64-bit
  // draw against p * 2^64 in integer arithmetic.
  bool bernoulli(const Rat& p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    const uint64_t k = next();
    mpz_class lhs(mpz_class(k) * p.get_den());
    mpz_class rhs(p.get_num());
    rhs <<= 64;
    return lhs < rhs;
  }

  double unit_double() {  // [0,1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace submax
