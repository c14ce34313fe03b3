#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "birkhoff/rational.hpp"

namespace birkhoff {

// Deterministic random source. mt19937_64 output is pinned by the standard;
// std::uniform_* distributions are not, so every draw below is derived from
// raw engine words only. Identical seed => identical reports, bit for bit,
// across compilers.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t word() { return eng_(); }

  // Uniform in [0, n). Modulo bias is irrelevant at the n used here.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

  long range(long lo, long hi) {  // inclusive ends
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (eng_() & 1u) != 0; }

  // k / 2^pow with k uniform over [-2^pow, 2^pow]; value lies in [-1, 1].
  Rational dyadic_unit_interval(unsigned pow) {
    long scale = 1L << pow;
    return rat(range(-scale, scale), scale);
  }

  Rational dyadic_nonzero(unsigned pow) {
    for (;;) {
      Rational q = dyadic_unit_interval(pow);
      if (sign(q) != 0) return q;
    }
  }

  // k / 2^pow with k uniform over [1, 2^pow]; value lies in (0, 1].
  Rational dyadic_positive(unsigned pow) {
    long scale = 1L << pow;
    return rat(range(1, scale), scale);
  }

  // Strictly increasing dyadic grid 0 = t_0 < ... < t_m = 1.
  std::vector<Rational> dyadic_partition(int pieces, unsigned pow) {
    long scale = 1L << pow;
    std::vector<long> ticks;
    ticks.reserve(static_cast<std::size_t>(pieces) + 1);
    ticks.push_back(0);
    while (static_cast<int>(ticks.size()) < pieces) {
      long t = range(1, scale - 1);
      bool dup = false;
      for (long s : ticks) dup = dup || s == t;
      if (!dup) ticks.push_back(t);
    }
    ticks.push_back(scale);
    std::sort(ticks.begin(), ticks.end());
    std::vector<Rational> out;
    out.reserve(ticks.size());
    for (long t : ticks) out.push_back(rat(t, scale));
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace birkhoff
