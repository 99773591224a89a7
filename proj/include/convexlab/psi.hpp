#pragma once

// Piecewise gate function over plug-in tables. The underlying r and m
// functions are supplied as finite tables and never extrapolated: any lookup
// past the table is an error naming the missing entry.

#include <cstdint>
#include <map>
#include <vector>

#include "convexlab/cubical.hpp"

namespace convexlab {

struct PsiTables {
  std::size_t d = 2;                               // dimension tag, only labels errors
  std::map<unsigned, std::uint64_t> r_table;       // b -> r(b, d)
  std::map<std::uint64_t, std::uint64_t> m_table;  // x -> m(x)

  void validate() const;        // positive and non-decreasing values
  std::uint64_t r(unsigned b) const;
  std::uint64_t m(std::uint64_t x) const;
};

// the three cases on t: up to r(b,d) the value is b-1 (the boundary point
// satisfies both first cases and resolves to the smaller value), up to
// m(r(b,d)) * r(b,d) it is b, past that it is the largest b' with
// t >= r(b'+1, d), certified by the next table entry
unsigned psi_eval(const PsiTables& tables, unsigned b, std::uint64_t t);

struct PhiPsiReport {
  bool ok = true;
  std::size_t checked_t = 0;             // how many t values were compared
  std::size_t violation_t = 0;           // first violating t when !ok
  unsigned phi = 0, psi = 0;             // values at the violation
  std::vector<unsigned> phi_profile;     // phi(1..t_max)
  std::vector<unsigned> psi_profile;     // psi(1..t_max)
};

// compares the homological shatter profile of the system against the gate
// function pointwise on 1..t_max
PhiPsiReport check_phi_below_psi(const CubicalSetSystem& sys, std::size_t h,
                                 const PsiTables& tables, unsigned b, std::size_t t_max);

}  // namespace convexlab
