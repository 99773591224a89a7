#include "convexlab/parameters.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "convexlab/enumeration.hpp"
#include "convexlab/error.hpp"

namespace convexlab {

SetSystem extract_subfamily(const SetSystem& sys, MemberMask active) {
  SetSystem sub;
  sub.ground_size = sys.ground_size;
  for (std::size_t i : mask_members(active)) {
    if (i >= sys.size()) throw input_error("subfamily mask selects member " + std::to_string(i) +
                                           " of a family with " + std::to_string(sys.size()));
    sub.sets.push_back(sys.sets[i]);
  }
  return sub;
}

namespace {

// Searches duplicate-free subsets of membership-class representatives for a
// non-partitionable set of the requested size. Any multiset repeating a
// class splits trivially (the two copies have equal, nonempty hulls), so
// these subsets are the only candidates.
std::optional<PointSet> find_nonpartitionable_impl(const SetSystem& sub, std::size_t size) {
  const Quotient q = quotient(sub);
  const std::size_t classes = q.system.ground_size;
  if (size > classes) return std::nullopt;
  std::vector<std::size_t> rep(classes, SIZE_MAX);
  for (std::size_t x = 0; x < sub.ground_size; ++x)
    if (rep[q.class_of[x]] == SIZE_MAX) rep[q.class_of[x]] = x;

  HullContext ctx(sub);
  const MemberMask all = full_mask(sub);
  std::optional<PointSet> found;
  if (size < 2) return std::nullopt;  // a single point never splits but is not a Radon witness
  for_each_combination(classes, size, [&](const std::vector<std::size_t>& c) {
    PointSet pts(size);
    for (std::size_t i = 0; i < size; ++i) pts[i] = rep[c[i]];
    if (!has_radon_partition(ctx, all, pts)) {
      found = std::move(pts);
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

std::optional<PointSet> find_nonpartitionable(const SetSystem& sys, MemberMask active,
                                              std::size_t size) {
  return find_nonpartitionable_impl(extract_subfamily(sys, active), size);
}

RadonResult radon_number_with_witness(const SetSystem& sys, MemberMask active) {
  const SetSystem sub = extract_subfamily(sys, active);
  const std::size_t classes = quotient(sub).system.ground_size;
  RadonResult result;
  // every size-r multiset splits once size-r witnesses run out; the property
  // is upward closed in r, so the first clean size wins
  for (std::size_t r = 2;; ++r) {
    auto witness = find_nonpartitionable_impl(sub, r);
    if (!witness) {
      result.number = static_cast<unsigned>(r);
      return result;
    }
    result.witness = std::move(witness);
    if (r > classes) throw std::logic_error("radon search exceeded the class bound");
  }
}

unsigned radon_number(const SetSystem& sys) {
  return radon_number_with_witness(sys, full_mask(sys)).number;
}

std::vector<std::vector<std::size_t>> minimal_empty_subfamilies(const SetSystem& sys,
                                                                MemberMask active,
                                                                std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  if (max_size == 0) return out;
  const std::vector<std::size_t> members = mask_members(active);
  for (std::size_t i : members)
    if (i >= sys.size()) throw input_error("subfamily mask out of range");

  std::vector<std::size_t> cur;
  auto minimal = [&](const std::vector<std::size_t>& g) {
    for (std::size_t skip = 0; skip < g.size(); ++skip) {
      Bitset inter = Bitset::full(sys.ground_size);
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != skip) inter &= sys.sets[g[j]];
      if (inter.none()) return false;
    }
    return true;
  };

  // Depth-first over members in increasing order carrying the running
  // intersection. Once it empties, no extension can be inclusion-minimal, so
  // candidates live exactly on the first-empty frontier; each minimal family
  // is reached because all its proper prefixes still intersect.
  std::function<void(std::size_t, const Bitset&)> rec = [&](std::size_t start,
                                                            const Bitset& inter) {
    for (std::size_t idx = start; idx < members.size(); ++idx) {
      const std::size_t i = members[idx];
      Bitset next = inter & sys.sets[i];
      if (next.any()) {
        if (cur.size() + 1 < max_size) {
          cur.push_back(i);
          rec(idx + 1, next);
          cur.pop_back();
        }
      } else {
        cur.push_back(i);
        if (minimal(cur)) out.push_back(cur);
        cur.pop_back();
      }
    }
  };
  rec(0, Bitset::full(sys.ground_size));
  return out;
}

unsigned helly_number(const SetSystem& sys, MemberMask active) {
  std::size_t best = 1;
  for (const auto& g :
       minimal_empty_subfamilies(sys, active, mask_members(active).size()))
    best = std::max(best, g.size());
  return static_cast<unsigned>(best);
}

unsigned helly_number(const SetSystem& sys) { return helly_number(sys, full_mask(sys)); }

ColorfulVerdict colorful_check(const SetSystem& sys, MemberMask active, const Coloring& coloring) {
  const std::vector<std::size_t> members = mask_members(active);
  if (coloring.color_of.size() != members.size())
    throw input_error("coloring size does not match the active subfamily");
  const std::size_t m = coloring.color_count;
  if (m == 0) throw input_error("coloring needs at least one color");
  std::vector<std::vector<std::size_t>> classes(m);
  for (std::size_t j = 0; j < members.size(); ++j) {
    if (coloring.color_of[j] >= m) throw input_error("color value out of range");
    classes[coloring.color_of[j]].push_back(members[j]);
  }
  for (const auto& cls : classes)
    if (cls.empty()) throw input_error("coloring must use every color");

  // colorful tuples by odometer, last color advancing fastest
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    Bitset inter = Bitset::full(sys.ground_size);
    for (std::size_t c = 0; c < m; ++c) inter &= sys.sets[classes[c][pick[c]]];
    if (inter.none()) return ColorfulVerdict::hypothesis_fails;
    std::size_t c = m;
    while (c > 0 && ++pick[c - 1] == classes[c - 1].size()) pick[--c] = 0;
    if (c == 0) break;
  }

  for (const auto& cls : classes) {
    Bitset inter = Bitset::full(sys.ground_size);
    for (std::size_t i : cls) inter &= sys.sets[i];
    if (inter.any()) return ColorfulVerdict::conclusion_holds;
  }
  return ColorfulVerdict::counterexample;
}

namespace {

// set partitions of {0..g-1} into exactly m blocks via restricted growth
// strings; fn gets the block index per element and returns false to stop
template <class F>
bool for_each_partition_into(std::size_t g, std::size_t m, F&& fn) {
  std::vector<std::size_t> a(g, 0);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (used > m || g - i < m - used) return true;  // cannot reach exactly m blocks
    if (i == g) return used == m ? fn(static_cast<const std::vector<std::size_t>&>(a)) : true;
    for (std::size_t b = 0; b <= used && b < m; ++b) {
      a[i] = b;
      if (!rec(i + 1, std::max(used, b + 1))) return false;
    }
    return true;
  };
  if (m == 0 || m > g) return true;
  return rec(0, 0);
}

bool has_colorful_counterexample(const SetSystem& sys, MemberMask active, std::size_t m) {
  const std::vector<std::size_t> members = mask_members(active);
  const std::size_t n = members.size();
  bool found = false;
  // counterexamples are invariant under permuting colors, so unlabeled
  // partitions (restricted growth strings) cover all surjective colorings
  for (MemberMask local = 1; local < (MemberMask{1} << n) && !found; ++local) {
    const std::size_t g = static_cast<std::size_t>(std::popcount(local));
    if (g < m) continue;
    MemberMask sub = 0;
    for (std::size_t j = 0; j < n; ++j)
      if ((local >> j) & 1) sub |= MemberMask{1} << members[j];
    for_each_partition_into(g, m, [&](const std::vector<std::size_t>& blocks) {
      Coloring col{blocks, m};
      if (colorful_check(sys, sub, col) == ColorfulVerdict::counterexample) {
        found = true;
        return false;
      }
      return true;
    });
  }
  return found;
}

}  // namespace

unsigned colorful_helly_number(const SetSystem& sys, MemberMask active, ColorfulOptions opts) {
  const std::size_t n = mask_members(active).size();
  if (n > opts.member_guard)
    throw size_error("colorful Helly enumeration guarded at " + std::to_string(opts.member_guard) +
                     " members, got " + std::to_string(n) +
                     " (raise the guard explicitly to proceed)");
  for (std::size_t m = 1; m < std::max<std::size_t>(n, 1); ++m)
    if (!has_colorful_counterexample(sys, active, m)) return static_cast<unsigned>(m);
  // m = n always works: the only surjective coloring is all-singletons on the
  // full subfamily, whose single colorful tuple is the subfamily itself
  return static_cast<unsigned>(std::max<std::size_t>(n, 1));
}

unsigned colorful_helly_number(const SetSystem& sys, ColorfulOptions opts) {
  return colorful_helly_number(sys, full_mask(sys), opts);
}

GradedProfile graded(const SetSystem& sys, GradedKind kind, std::size_t t_max, GradedOptions opts) {
  GradedProfile profile;
  profile.kind = kind;
  const std::size_t n = sys.size();
  full_mask(sys);  // enforce the mask limit up front
  if (t_max == 0) return profile;

  if (n == 0) {
    // only the empty subfamily: hulls are all of X, so any pair splits
    const unsigned v = kind == GradedKind::radon ? 2 : 1;
    profile.values.assign(t_max, v);
    return profile;
  }

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  const std::size_t e_max = std::min(t_max, n);
  std::vector<unsigned> best(e_max + 1, 0);

  if (kind == GradedKind::helly) {
    // one frontier search serves the whole profile: a minimal empty family
    // of size s raises exactly the values at t >= s
    best.assign(e_max + 1, 1);
    for (const auto& g : minimal_empty_subfamilies(sys, full_mask(sys), e_max))
      best[g.size()] = std::max(best[g.size()], static_cast<unsigned>(g.size()));
  } else {
    for (std::size_t e = 1; e <= e_max; ++e) {
      unsigned v = 0;
      for_each_subfamily_of_size(all, e, [&](MemberMask sub) {
        const unsigned cur = kind == GradedKind::radon
                                 ? radon_number_with_witness(sys, sub).number
                                 : colorful_helly_number(sys, sub, opts.colorful);
        v = std::max(v, cur);
        return true;
      });
      best[e] = v;
    }
  }

  profile.values.resize(t_max);
  unsigned running = 0;
  for (std::size_t t = 1; t <= t_max; ++t) {
    if (t <= e_max) running = std::max(running, best[t]);
    profile.values[t - 1] = running;
  }
  return profile;
}

}  // namespace convexlab
