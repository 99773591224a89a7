#include "convexlab/generators.hpp"

#include <algorithm>
#include <string>

#include "convexlab/components.hpp"
#include "convexlab/enumeration.hpp"
#include "convexlab/error.hpp"
#include "convexlab/parameters.hpp"
#include "convexlab/rng.hpp"

namespace convexlab {

HellyFamily gen_helly_sequence(const std::vector<unsigned>& u) {
  if (u.empty()) throw input_error("u must contain at least one value");
  for (std::size_t t = 1; t <= u.size(); ++t) {
    const unsigned cur = u[t - 1];
    const unsigned prev = t == 1 ? 0 : u[t - 2];
    if (cur == 0)
      throw input_error("u[" + std::to_string(t) + "] = 0; profile values start at 1");
    if (cur < prev)
      throw input_error("u[" + std::to_string(t) + "] = " + std::to_string(cur) +
                        " decreases below " + std::to_string(prev));
    if (cur > t)
      throw input_error("u[" + std::to_string(t) + "] = " + std::to_string(cur) +
                        " exceeds its index " + std::to_string(t));
    if (cur > prev && cur != t)
      throw input_error("u[" + std::to_string(t) + "] jumps to " + std::to_string(cur) +
                        " but a strict increase must land on " + std::to_string(t));
  }

  HellyFamily fam;
  fam.u = u;
  fam.system.ground_size = u.back();  // non-decreasing, so the last value is the max
  for (std::size_t i = 1; i <= u.size(); ++i) {
    for (unsigned k = 1; k <= u[i - 1]; ++k) {
      Bitset s(fam.system.ground_size);
      for (unsigned x = 1; x <= u[i - 1]; ++x)
        if (x != k) s.set(x - 1);
      fam.system.add(s);
      fam.names.push_back("F" + std::to_string(k) + "_" + std::to_string(i));
    }
  }
  return fam;
}

BinaryWordFamily gen_binary_words(std::size_t k) {
  if (k < 2 || k > 5)
    throw size_error("k = " + std::to_string(k) +
                     " outside 2..5; the ground set has 2^(2^(k-1)-1) words");
  BinaryWordFamily fam;
  fam.k = k;
  const std::size_t len = (std::size_t{1} << (k - 1)) - 1;
  fam.word_length = len;
  fam.system.ground_size = std::size_t{1} << len;

  // one member per letter position and value, value 0 first
  for (std::size_t i = 1; i <= len; ++i) {
    for (unsigned delta = 0; delta <= 1; ++delta) {
      Bitset s(fam.system.ground_size);
      for (std::size_t w = 0; w < fam.system.ground_size; ++w) {
        const unsigned letter = (w >> (len - i)) & 1u;  // words read most significant first
        if (letter == delta) s.set(w);
      }
      fam.system.add(s);
      fam.names.push_back("F" + std::to_string(i) + "_" + std::to_string(delta));
    }
  }

  // point j comes from reading, across all two-block partitions of {1..k},
  // whether j sits in the block of element 1 (letter 0) or not (letter 1);
  // partition ell encodes in the bits of ell-1 which of 2..k join element 1
  for (std::size_t j = 1; j <= k; ++j) {
    std::size_t w = 0;
    std::string word;
    for (std::size_t ell = 1; ell <= len; ++ell) {
      bool with_first = j == 1;
      if (j >= 2) with_first = ((ell - 1) >> (k - j)) & 1u;
      const unsigned letter = with_first ? 0u : 1u;
      w = (w << 1) | letter;
      word.push_back(letter ? '1' : '0');
    }
    fam.s.push_back(w);
    fam.s_words.push_back(word);
  }
  return fam;
}

namespace {

constexpr std::size_t kBoxHeight = 5;

// clockwise walk of a 3x3 ring's perimeter from its top-left cell; bx, by is
// the bottom-left corner of the 3x3 block
std::vector<std::pair<std::size_t, std::size_t>> ring_walk(std::size_t bx, std::size_t by) {
  return {{bx, by + 2},     {bx + 1, by + 2}, {bx + 2, by + 2}, {bx + 2, by + 1},
          {bx + 2, by},     {bx + 1, by},     {bx, by},         {bx, by + 1}};
}

}  // namespace

MemberMask ShatterFamily::box_members(std::size_t i) const {
  MemberMask m = 0;
  for (std::size_t k = 1; k <= i; ++k) m |= MemberMask{1} << member_index(i, k);
  return m;
}

Bitset ShatterFamily::box_cells(std::size_t i) const {
  Bitset b(system.cell_count());
  const std::size_t x0 = box_x0[i - 1];
  for (std::size_t x = x0; x < x0 + box_width[i - 1]; ++x)
    for (std::size_t y = 0; y < kBoxHeight; ++y) b.set(cell_index({x, y}, system.dims));
  return b;
}

ShatterFamily gen_shatter_family(const std::vector<unsigned>& f, GenShatterOptions opts) {
  if (f.empty()) throw input_error("f must contain at least one value");
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] < f[i - 1])
      throw input_error("f[" + std::to_string(i + 1) + "] = " + std::to_string(f[i]) +
                        " decreases below " + std::to_string(f[i - 1]));
  if (opts.max_arcs > 8) opts.max_arcs = 8;  // a side-3 ring has only 8 cells
  if (f.size() > opts.max_arcs) {
    const std::size_t side = (f.size() + 3) / 4 + 1;
    throw size_error(std::to_string(f.size()) + " arcs exceed the side-3 ring capacity of " +
                     std::to_string(opts.max_arcs) + "; rings of side " + std::to_string(side) +
                     " on a grid of height " + std::to_string(side + 2) + " would be needed");
  }
  if (f.back() > opts.max_rings)
    throw size_error("f reaches " + std::to_string(f.back()) + " rings per box, capped at " +
                     std::to_string(opts.max_rings) + "; the box would need width " +
                     std::to_string(4 * f.back() + 1));

  ShatterFamily fam;
  fam.f = f;
  const std::size_t n = f.size();
  std::size_t x = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    fam.box_x0.push_back(x);
    const std::size_t w = f[i - 1] ? 4 * std::size_t{f[i - 1]} + 1 : 1;
    fam.box_width.push_back(w);
    x += w + 1;  // one gap column between boxes
  }
  fam.system.dims = {x - 1, kBoxHeight};
  const std::size_t cells = fam.system.cell_count();

  for (std::size_t i = 1; i <= n; ++i) {
    // arc k covers a contiguous run of the ring walk; early arcs absorb the
    // remainder so every arc has at least one cell
    std::vector<std::size_t> arc_of(8);
    std::size_t pos = 0;
    for (std::size_t k = 1; k <= i; ++k) {
      std::size_t len = 8 / i + (k <= 8 % i ? 1 : 0);
      while (len--) arc_of[pos++] = k;
    }

    for (std::size_t k = 1; k <= i; ++k) {
      Bitset member(cells);
      const std::size_t x0 = fam.box_x0[i - 1];
      for (std::size_t cx = x0; cx < x0 + fam.box_width[i - 1]; ++cx)
        for (std::size_t cy = 0; cy < kBoxHeight; ++cy)
          member.set(cell_index({cx, cy}, fam.system.dims));
      for (unsigned r = 0; r < f[i - 1]; ++r) {
        const auto walk = ring_walk(x0 + 1 + 4 * std::size_t{r}, 1);
        for (std::size_t p = 0; p < walk.size(); ++p)
          if (arc_of[p] == k)
            member.reset(cell_index({walk[p].first, walk[p].second}, fam.system.dims));
      }
      fam.system.sets.push_back(std::move(member));
      fam.names.push_back("F" + std::to_string(k) + "_" + std::to_string(i));
    }
  }
  fam.system.validate();
  return fam;
}

RandomFlatFamily gen_random_abstract(std::size_t ground, std::size_t members, double density,
                                     std::uint64_t seed) {
  if (ground == 0) throw input_error("ground size must be positive");
  if (!(density >= 0.0 && density <= 1.0)) throw input_error("density must lie in [0,1]");
  RandomFlatFamily fam;
  fam.system.ground_size = ground;
  Rng rng(seed);
  for (std::size_t i = 0; i < members; ++i) {
    Bitset s(ground);
    for (std::size_t x = 0; x < ground; ++x)
      if (rng.bernoulli(density)) s.set(x);
    fam.system.add(s);
    fam.names.push_back("s" + std::to_string(i));
  }
  return fam;
}

RandomFlatFamily gen_random_intervals(std::size_t cells, std::size_t members,
                                      std::uint64_t seed) {
  if (cells == 0) throw input_error("the line needs at least one cell");
  RandomFlatFamily fam;
  fam.system.ground_size = cells;
  Rng rng(seed);
  for (std::size_t i = 0; i < members; ++i) {
    const std::size_t a = rng.below(cells);
    const std::size_t b = a + rng.below(cells - a);
    Bitset s(cells);
    for (std::size_t x = a; x <= b; ++x) s.set(x);
    fam.system.add(s);
    fam.names.push_back("s" + std::to_string(i));
  }
  return fam;
}

RandomCubicalFamily gen_random_boxes(const std::vector<std::size_t>& dims, std::size_t members,
                                     std::uint64_t seed) {
  RandomCubicalFamily fam;
  fam.system.dims = dims;
  fam.system.validate();  // checks the axis count and extents
  const std::size_t cells = fam.system.cell_count();
  Rng rng(seed);
  for (std::size_t i = 0; i < members; ++i) {
    std::vector<std::size_t> lo(dims.size()), hi(dims.size());
    for (std::size_t a = 0; a < dims.size(); ++a) {
      lo[a] = rng.below(dims[a]);
      hi[a] = lo[a] + rng.below(dims[a] - lo[a]);
    }
    Bitset s(cells);
    std::vector<std::size_t> c = lo;
    while (true) {
      s.set(cell_index(c, dims));
      std::size_t a = dims.size();
      while (a > 0 && c[a - 1] == hi[a - 1]) {
        --a;
        c[a] = lo[a];
      }
      if (a == 0) break;
      ++c[a - 1];
    }
    fam.system.sets.push_back(std::move(s));
    fam.names.push_back("s" + std::to_string(i));
  }
  return fam;
}

namespace {

void note(CertificateReport& rep, bool ok, std::string line) {
  rep.ok = rep.ok && ok;
  rep.lines.push_back((ok ? "ok: " : "FAIL: ") + std::move(line));
}

}  // namespace

CertificateReport certify(const HellyFamily& fam) {
  CertificateReport rep;
  const GradedProfile prof = graded(fam.system, GradedKind::helly, fam.u.size());
  for (std::size_t t = 1; t <= fam.u.size(); ++t)
    note(rep, prof.at(t) == fam.u[t - 1],
         "graded Helly value " + std::to_string(prof.at(t)) + " at t=" + std::to_string(t) +
             ", target " + std::to_string(fam.u[t - 1]));
  return rep;
}

CertificateReport certify(const BinaryWordFamily& fam) {
  CertificateReport rep;
  HullContext ctx(fam.system);
  const MemberMask all = full_mask(fam.system);
  note(rep, !has_radon_partition(ctx, all, fam.s),
       "the distinguished points admit no partition under the full family");
  for (std::size_t j = 0; j < fam.system.size(); ++j) {
    const bool split = has_radon_partition(ctx, all & ~(MemberMask{1} << j), fam.s);
    note(rep, split, "dropping " + fam.names[j] + " makes the points partitionable");
  }
  return rep;
}

CertificateReport certify(const ShatterFamily& fam, std::size_t sweep_budget) {
  CertificateReport rep;
  const std::size_t n = fam.f.size();
  for (std::size_t i = 1; i <= n; ++i) {
    const BettiVector full = betti(fam.system, fam.box_members(i), 0);
    note(rep, !full.empty_intersection && full.reduced[0] == fam.f[i - 1],
         "box " + std::to_string(i) + " full intersection has " +
             std::to_string(full.reduced[0]) + " extra components, target " +
             std::to_string(fam.f[i - 1]));

    // independent count over the same cell set
    Bitset inter = fam.box_cells(i);
    for (std::size_t k = 1; k <= i; ++k)
      inter &= fam.system.sets[fam.member_index(i, k)];
    note(rep, component_count(inter, fam.system.dims) == fam.f[i - 1] + std::size_t{1},
         "box " + std::to_string(i) + " union-find agrees");

    bool proper_ok = true;
    const MemberMask box = fam.box_members(i);
    for (MemberMask sub = box & (box - 1); ; sub = (sub - 1) & box) {
      if (sub != 0 && sub != box) {
        const BettiVector bv = betti(fam.system, sub, 0);
        if (bv.empty_intersection || bv.reduced[0] != 0) {
          proper_ok = false;
          break;
        }
      }
      if (sub == 0) break;
    }
    note(rep, proper_ok, "box " + std::to_string(i) + " proper sub-intersections stay connected");
  }

  // the full profile sweep when the subfamily count is affordable
  std::size_t count = 1, pick = 1;
  bool affordable = true;
  for (std::size_t s = 1; s <= n && affordable; ++s) {
    pick = pick * (fam.system.size() - s + 1) / s;
    count += pick;
    if (count > sweep_budget) affordable = false;
  }
  if (affordable) {
    for (std::size_t t = 1; t <= n; ++t)
      note(rep, shatter_value(fam.system, 0, t) == fam.f[t - 1],
           "shatter value at t=" + std::to_string(t) + " equals " + std::to_string(fam.f[t - 1]));
  } else {
    rep.lines.push_back("note: full shatter sweep skipped, more than " +
                        std::to_string(sweep_budget) + " subfamilies");
  }
  return rep;
}

}  // namespace convexlab
