#pragma once

// Deterministic random source. std::mt19937_64 output is pinned by the
// standard, but the distribution adaptors are not, so bounded draws are done
// here with rejection sampling to keep byte-identical streams across
// platforms and library versions.

#include <cassert>
#include <cstdint>
#include <random>

namespace convexlab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // uniform draw from {0, ..., n-1}, n >= 1
  std::uint64_t below(std::uint64_t n) {
    assert(n >= 1);
    if (n == 1) return 0;
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // uniform draw from {lo, ..., hi} inclusive
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    assert(lo <= hi);
    return lo + below(hi - lo + 1);
  }

  // true with probability p (p in [0,1])
  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    // compare against a fixed-point threshold; 2^64 * p fits the comparison
    return static_cast<double>(engine_()) < p * 18446744073709551616.0;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace convexlab
