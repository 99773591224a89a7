#pragma once

// Empirical probes of the fractional-Helly picture: intersecting-tuple
// fractions, depth, clique sizes, and the colorful/graded hypothesis pair.
// These report measurements; the theorems' nonconstructive constants are
// never computed.

#include <cstddef>

#include "convexlab/parameters.hpp"
#include "convexlab/set_system.hpp"
#include "convexlab/stats.hpp"

namespace convexlab {

struct ProbeReport {
  std::size_t n = 0;          // family size
  std::size_t s = 0;          // tuple size probed
  TupleFraction alpha;        // intersecting s-tuple fraction
  DepthResult beta;           // deepest point, beta.fraction is the depth fraction
  std::size_t k = 0;          // clique arity probed
  CliqueResult clique;        // largest k-wise intersecting subfamily found
  double clique_fraction = 0.0;
};

ProbeReport probe_fractional_helly(const SetSystem& sys, std::size_t s, std::size_t k,
                                   TupleFractionOptions opts = {});

struct CliqueHypothesesReport {
  std::size_t k = 0;
  std::size_t m = 0;
  unsigned ch_mk = 0;  // graded colorful Helly value at t = m*k
  unsigned h_m = 0;    // graded Helly value at t = m
  bool ch_within_m = false;
  bool h_within_k = false;
  bool holds() const { return ch_within_m && h_within_k; }
};

// evaluates the two enumerable hypotheses ch^(mk) <= m and h^(m) <= k; the
// colorful enumeration guard applies to m*k
CliqueHypothesesReport check_colorful_clique_hypotheses(const SetSystem& sys, std::size_t k,
                                                        std::size_t m,
                                                        ColorfulOptions guard = {});

}  // namespace convexlab
