#pragma once

// Intersection-pattern statistics: fraction of intersecting s-tuples, the
// deepest ground element, and the largest k-wise intersecting subfamily.

#include <cstdint>

#include "convexlab/set_system.hpp"

namespace convexlab {

struct TupleFractionOptions {
  std::uint64_t exact_budget = 1'000'000;  // enumerate when C(n,s) fits
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
};

struct TupleFraction {
  bool exact = true;
  std::uint64_t hits = 0;
  std::uint64_t total = 0;  // C(n,s) when exact, sample count otherwise
  double value = 0.0;
};

TupleFraction intersecting_tuple_fraction(const SetSystem& sys, std::size_t s,
                                          TupleFractionOptions opts = {});

struct DepthResult {
  std::size_t element = 0;  // lowest index among the deepest
  std::size_t depth = 0;    // members containing it
  double fraction = 0.0;    // depth / family size
};

DepthResult max_depth_fraction(const SetSystem& sys);

struct CliqueResult {
  MemberMask members = 0;
  std::size_t size = 0;
  bool exact = true;  // false past exact_limit (greedy lower bound)
};

// Largest subfamily whose every k-subset intersects. Branch-and-bound up to
// exact_limit members, greedy in index order beyond.
CliqueResult max_kwise_clique(const SetSystem& sys, std::size_t k, std::size_t exact_limit = 20);

}  // namespace convexlab
