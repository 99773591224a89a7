#include "convexlab/psi.hpp"

#include <string>

#include "convexlab/enumeration.hpp"
#include "convexlab/error.hpp"

namespace convexlab {

void PsiTables::validate() const {
  std::uint64_t prev = 0;
  for (const auto& [b, v] : r_table) {
    if (v == 0) throw input_error("r(" + std::to_string(b) + ") must be positive");
    if (v < prev)
      throw input_error("r table decreases at b = " + std::to_string(b));
    prev = v;
  }
  prev = 0;
  for (const auto& [x, v] : m_table) {
    if (v == 0) throw input_error("m(" + std::to_string(x) + ") must be positive");
    if (v < prev)
      throw input_error("m table decreases at x = " + std::to_string(x));
    prev = v;
  }
}

std::uint64_t PsiTables::r(unsigned b) const {
  const auto it = r_table.find(b);
  if (it == r_table.end())
    throw input_error("r table has no entry for b = " + std::to_string(b) + " (d = " +
                      std::to_string(d) + ")");
  return it->second;
}

std::uint64_t PsiTables::m(std::uint64_t x) const {
  const auto it = m_table.find(x);
  if (it == m_table.end())
    throw input_error("m table has no entry for x = " + std::to_string(x));
  return it->second;
}

unsigned psi_eval(const PsiTables& tables, unsigned b, std::uint64_t t) {
  if (b == 0) throw input_error("b must be at least 1");
  const std::uint64_t rb = tables.r(b);
  if (t <= rb) return b - 1;
  if (t <= tables.m(rb) * rb) return b;
  // largest b' with r(b'+1) <= t, walking the keys upward so a gap or a
  // missing upper witness is reported instead of guessed over
  unsigned k = b;  // r(b) <= t already holds here
  while (true) {
    const auto it = tables.r_table.find(k + 1);
    if (it == tables.r_table.end())
      throw input_error("r table has no entry for b = " + std::to_string(k + 1) +
                        " (needed to bound the third case at t = " + std::to_string(t) + ")");
    if (it->second > t) return k - 1;
    ++k;
  }
}

PhiPsiReport check_phi_below_psi(const CubicalSetSystem& sys, std::size_t h,
                                 const PsiTables& tables, unsigned b, std::size_t t_max) {
  PhiPsiReport rep;
  if (t_max == 0) return rep;

  // one enumeration pass: record the best value per exact subfamily size,
  // then prefix-max into the profile
  sys.validate();
  if (sys.size() > 64) throw size_error("shatter sweep supports at most 64 members");
  const std::size_t n = sys.size();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  const std::size_t s_max = std::min(t_max, n);
  std::vector<unsigned> best(s_max + 1, 0);
  for (std::size_t s = 0; s <= s_max; ++s) {
    for_each_subfamily_of_size(all, s, [&](MemberMask mask) {
      const BettiVector bv = betti(sys, mask, h);
      for (unsigned v : bv.reduced) best[s] = std::max(best[s], v);
      return true;
    });
  }

  unsigned running = best[0];
  for (std::size_t t = 1; t <= t_max; ++t) {
    if (t <= s_max) running = std::max(running, best[t]);
    rep.phi_profile.push_back(running);
    rep.psi_profile.push_back(psi_eval(tables, b, t));
  }
  for (std::size_t t = 1; t <= t_max; ++t) {
    ++rep.checked_t;
    if (rep.phi_profile[t - 1] > rep.psi_profile[t - 1]) {
      rep.ok = false;
      rep.violation_t = t;
      rep.phi = rep.phi_profile[t - 1];
      rep.psi = rep.psi_profile[t - 1];
      break;
    }
  }
  return rep;
}

}  // namespace convexlab
