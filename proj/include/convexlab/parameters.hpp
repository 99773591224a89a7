#pragma once

// Radon, Helly and colorful Helly numbers of a finite set system, their
// graded variants (supremum over subfamilies of bounded size), and the
// search primitives behind them.
//
// Conventions: the Radon number is at least 2 (a single point has no
// two-block split); the Helly number of a family with no empty-intersection
// subfamily is 1; point sets are multisets, and a repeated element always
// splits trivially, which bounds the Radon number by #membership-classes + 1
// and lets the search range over duplicate-free class representatives.

#include <optional>
#include <vector>

#include "convexlab/set_system.hpp"

namespace convexlab {

SetSystem extract_subfamily(const SetSystem& sys, MemberMask active);

struct RadonResult {
  unsigned number = 2;
  // non-partitionable multiset of size number-1; absent when number == 2
  std::optional<PointSet> witness;
};

unsigned radon_number(const SetSystem& sys);
RadonResult radon_number_with_witness(const SetSystem& sys, MemberMask active);

// first non-partitionable point set of exactly the given size, in the class
// representative enumeration order; nothing if all of them split
std::optional<PointSet> find_nonpartitionable(const SetSystem& sys, MemberMask active,
                                              std::size_t size);

// All inclusion-minimal subfamilies (by member index, increasing) with empty
// intersection, up to max_size members. Minimality never references the
// ambient family, so these are shared by every subfamily containing them.
std::vector<std::vector<std::size_t>> minimal_empty_subfamilies(const SetSystem& sys,
                                                                MemberMask active,
                                                                std::size_t max_size);

unsigned helly_number(const SetSystem& sys);
unsigned helly_number(const SetSystem& sys, MemberMask active);

enum class ColorfulVerdict { hypothesis_fails, conclusion_holds, counterexample };

// Evaluates the colorful implication for one surjective coloring of the
// active members: a colorful tuple picks one member of each color; if some
// tuple fails to intersect the hypothesis fails, otherwise either a color
// class has a common point or the coloring is a counterexample.
ColorfulVerdict colorful_check(const SetSystem& sys, MemberMask active, const Coloring& coloring);

struct ColorfulOptions {
  std::size_t member_guard = 10;  // set-partition enumeration blows up past this
};

unsigned colorful_helly_number(const SetSystem& sys, ColorfulOptions opts = {});
unsigned colorful_helly_number(const SetSystem& sys, MemberMask active, ColorfulOptions opts = {});

enum class GradedKind { radon, helly, colorful_helly };

struct GradedProfile {
  GradedKind kind = GradedKind::radon;
  std::vector<unsigned> values;  // values[t-1] = parameter over subfamilies of size <= t

  unsigned at(std::size_t t) const { return values.at(t - 1); }
};

struct GradedOptions {
  ColorfulOptions colorful;
};

// Profile for t = 1..t_max. t_max beyond the family size extends the profile
// as a constant (the supremum ranges over the same subfamilies).
GradedProfile graded(const SetSystem& sys, GradedKind kind, std::size_t t_max,
                     GradedOptions opts = {});

}  // namespace convexlab
