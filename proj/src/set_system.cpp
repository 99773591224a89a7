#include "convexlab/set_system.hpp"

#include <map>
#include <string>

#include "convexlab/error.hpp"

namespace convexlab {

void SetSystem::add(const Bitset& s) {
  if (s.size() != ground_size)
    throw input_error("member size " + std::to_string(s.size()) + " does not match ground size " +
                      std::to_string(ground_size));
  sets.push_back(s);
}

Bitset SetSystem::intersection_of_all() const {
  Bitset r = Bitset::full(ground_size);
  for (const auto& s : sets) r &= s;
  return r;
}

MemberMask full_mask(const SetSystem& sys) {
  if (sys.size() > 64)
    throw size_error("member masks support at most 64 family members, got " +
                     std::to_string(sys.size()));
  if (sys.size() == 64) return ~MemberMask{0};
  return (MemberMask{1} << sys.size()) - 1;
}

HullContext::HullContext(const SetSystem& sys) : sys_(&sys), member_of_(sys.ground_size, 0) {
  full_mask(sys);  // enforce the 64-member limit
  for (std::size_t i = 0; i < sys.sets.size(); ++i)
    sys.sets[i].for_each_set([&](std::size_t x) { member_of_[x] |= MemberMask{1} << i; });
}

MemberMask HullContext::containing(MemberMask active, const PointSet& points) const {
  MemberMask m = active;
  for (std::size_t p : points) {
    if (p >= sys_->ground_size)
      throw input_error("point index " + std::to_string(p) + " out of range for ground size " +
                        std::to_string(sys_->ground_size));
    m &= member_of_[p];
  }
  return m;
}

Bitset HullContext::hull(MemberMask active, const PointSet& points) const {
  MemberMask m = containing(active, points);
  if (m == 0) return Bitset::full(sys_->ground_size);
  Bitset r = Bitset::full(sys_->ground_size);
  while (m) {
    std::size_t i = static_cast<std::size_t>(std::countr_zero(m));
    r &= sys_->sets[i];
    m &= m - 1;
  }
  return r;
}

bool HullContext::blocks_intersect(MemberMask active, const PointSet& a, const PointSet& b) const {
  Bitset h = hull(active, a);
  if (h.none()) return false;
  MemberMask m = containing(active, b);
  while (m) {
    std::size_t i = static_cast<std::size_t>(std::countr_zero(m));
    h &= sys_->sets[i];
    if (h.none()) return false;
    m &= m - 1;
  }
  return h.any();
}

Bitset hull(const SetSystem& sys, MemberMask active, const PointSet& points) {
  return HullContext(sys).hull(active, points);
}

bool is_radon_partition(const SetSystem& sys, MemberMask active, const Partition2& p) {
  if (p.block0.empty() || p.block1.empty())
    throw input_error("both partition blocks must be nonempty");
  return HullContext(sys).blocks_intersect(active, p.block0, p.block1);
}

std::optional<Partition2> find_radon_partition(const HullContext& ctx, MemberMask active,
                                               const PointSet& points) {
  if (points.size() < 2) throw input_error("Radon partition search needs at least 2 points");
  const std::size_t s = points.size();
  if (s - 1 >= 64) throw size_error("point set too large for split enumeration");
  PointSet a, b;
  for (MemberMask split = 1; split < (MemberMask{1} << (s - 1)); ++split) {
    a.assign(1, points[0]);
    b.clear();
    for (std::size_t j = 1; j < s; ++j)
      ((split >> (j - 1)) & 1 ? b : a).push_back(points[j]);
    if (ctx.blocks_intersect(active, a, b)) return Partition2{a, b};
  }
  return std::nullopt;
}

std::optional<Partition2> find_radon_partition(const SetSystem& sys, MemberMask active,
                                               const PointSet& points) {
  return find_radon_partition(HullContext(sys), active, points);
}

bool has_radon_partition(const HullContext& ctx, MemberMask active, const PointSet& points) {
  return find_radon_partition(ctx, active, points).has_value();
}

Quotient quotient(const SetSystem& sys) {
  Quotient q;
  q.class_of.resize(sys.ground_size);
  // membership column of element x across the family, in member order
  std::map<std::vector<bool>, std::size_t> seen;
  std::vector<std::vector<bool>> columns;
  for (std::size_t x = 0; x < sys.ground_size; ++x) {
    std::vector<bool> col(sys.size());
    for (std::size_t i = 0; i < sys.size(); ++i) col[i] = sys.sets[i].test(x);
    auto [it, fresh] = seen.try_emplace(col, columns.size());
    if (fresh) columns.push_back(col);
    q.class_of[x] = it->second;
  }
  q.system.ground_size = columns.size();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    Bitset s(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (columns[c][i]) s.set(c);
    q.system.sets.push_back(std::move(s));
  }
  return q;
}

}  // namespace convexlab
