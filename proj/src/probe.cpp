#include "convexlab/probe.hpp"

#include <string>

#include "convexlab/error.hpp"

namespace convexlab {

ProbeReport probe_fractional_helly(const SetSystem& sys, std::size_t s, std::size_t k,
                                   TupleFractionOptions opts) {
  ProbeReport rep;
  rep.n = sys.size();
  rep.s = s;
  rep.k = k;
  rep.alpha = intersecting_tuple_fraction(sys, s, opts);
  rep.beta = max_depth_fraction(sys);
  rep.clique = max_kwise_clique(sys, k);
  rep.clique_fraction = rep.n ? static_cast<double>(rep.clique.size) / static_cast<double>(rep.n)
                              : 0.0;
  return rep;
}

CliqueHypothesesReport check_colorful_clique_hypotheses(const SetSystem& sys, std::size_t k,
                                                        std::size_t m, ColorfulOptions guard) {
  if (k == 0 || m == 0) throw input_error("k and m must be at least 1");
  CliqueHypothesesReport rep;
  rep.k = k;
  rep.m = m;
  const std::size_t mk = m * k;
  if (mk > guard.member_guard)
    throw size_error("colorful Helly enumeration guarded at " +
                     std::to_string(guard.member_guard) + " members, the hypotheses need t = " +
                     std::to_string(mk) + " (raise the guard explicitly to proceed)");
  GradedOptions gopts;
  gopts.colorful = guard;
  rep.ch_mk = graded(sys, GradedKind::colorful_helly, mk, gopts).at(mk);
  rep.h_m = graded(sys, GradedKind::helly, m).at(m);
  rep.ch_within_m = rep.ch_mk <= m;
  rep.h_within_k = rep.h_m <= k;
  return rep;
}

}  // namespace convexlab
