#pragma once

// Finite set systems over a ground set {0..n-1}. The hull of a point multiset
// is the intersection of all active members containing it, or the whole
// ground set when no member does. A Radon partition is a two-block split of
// a multiset whose block hulls intersect.

#include <cstdint>
#include <optional>
#include <vector>

#include "convexlab/bitset.hpp"

namespace convexlab {

struct SetSystem {
  std::size_t ground_size = 0;
  std::vector<Bitset> sets;

  std::size_t size() const { return sets.size(); }
  void add(const Bitset& s);           // throws input_error on size mismatch
  Bitset intersection_of_all() const;  // full ground set for an empty family
};

// Multiset of ground elements; repeats are meaningful.
using PointSet = std::vector<std::size_t>;

struct Partition2 {
  PointSet block0;
  PointSet block1;
};

// Member selection as a 64-bit mask, bit i = family member i. Operations
// taking masks reject families with more than 64 members.
using MemberMask = std::uint64_t;

MemberMask full_mask(const SetSystem& sys);  // throws size_error past 64 members

// color per member of the active subfamily, in member-index order
struct Coloring {
  std::vector<std::size_t> color_of;  // size = popcount(active mask)
  std::size_t color_count = 0;
};

// Precomputes, per ground element, the mask of members containing it, so
// hulls inside search loops cost one mask AND per point plus one set AND per
// containing member.
class HullContext {
 public:
  explicit HullContext(const SetSystem& sys);

  const SetSystem& system() const { return *sys_; }

  // members (within active) containing every point; throws input_error on a
  // point index out of range
  MemberMask containing(MemberMask active, const PointSet& points) const;

  Bitset hull(MemberMask active, const PointSet& points) const;

  // hull(block0) and hull(block1) share an element
  bool blocks_intersect(MemberMask active, const PointSet& a, const PointSet& b) const;

 private:
  const SetSystem* sys_;
  std::vector<MemberMask> member_of_;  // per ground element
};

Bitset hull(const SetSystem& sys, MemberMask active, const PointSet& points);

bool is_radon_partition(const SetSystem& sys, MemberMask active, const Partition2& p);

// First Radon partition in the pinned enumeration order: point 0 stays in
// block0; split masks run 1 .. 2^(s-1)-1 in increasing numeric order, bit
// j-1 sending point j to block1. Returns nothing when no split works.
std::optional<Partition2> find_radon_partition(const SetSystem& sys, MemberMask active,
                                               const PointSet& points);
std::optional<Partition2> find_radon_partition(const HullContext& ctx, MemberMask active,
                                               const PointSet& points);
bool has_radon_partition(const HullContext& ctx, MemberMask active, const PointSet& points);

struct Quotient {
  SetSystem system;                  // one ground element per membership class
  std::vector<std::size_t> class_of;  // original element -> class index
};

// Collapses ground elements with identical membership columns. Class indices
// are assigned in order of first appearance.
Quotient quotient(const SetSystem& sys);

}  // namespace convexlab
