// Acceptance gate: one pass/fail line per criterion, exit 0 only when all
// pass. Tolerances are exact (integer or representable-double comparisons)
// except the wall-clock bounds, which are stated per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "convexlab/components.hpp"
#include "convexlab/cubical.hpp"
#include "convexlab/enumeration.hpp"
#include "convexlab/generators.hpp"
#include "convexlab/gf2.hpp"
#include "convexlab/parameters.hpp"
#include "convexlab/psi.hpp"
#include "convexlab/rng.hpp"
#include "convexlab/set_system.hpp"
#include "convexlab/stats.hpp"
#include "convexlab/verify.hpp"
#include "oracles.hpp"

namespace {

using namespace convexlab;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;  // keep the first reason
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SetSystem block_system(std::size_t blocks, std::size_t per_block) {
  SetSystem sys;
  sys.ground_size = blocks;
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t j = 0; j < per_block; ++j) {
      Bitset s(blocks);
      s.set(b);
      sys.add(s);
    }
  return sys;
}

PsiTables doubling_tables() {
  PsiTables t;
  for (unsigned b = 1; b <= 7; ++b) {
    const std::uint64_t x = std::uint64_t{1} << b;
    t.r_table[b] = x;
    t.m_table[x] = x + 1;
  }
  t.validate();
  return t;
}

// 1. optimized parameters equal the naive oracles on every tiny system
Outcome criterion_oracle_equivalence() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::size_t count = 0;
  oracles::for_each_tiny_system(3, 3, [&](const SetSystem& sys) {
    if (!out.ok) return;
    ++count;
    const std::string tag = "system #" + std::to_string(count);
    out.expect(radon_number(sys) == oracles::radon_number(sys), tag + ": radon differs");
    const unsigned h = helly_number(sys);
    out.expect(h == oracles::helly_number_direct(sys), tag + ": helly differs from direct oracle");
    out.expect(h == oracles::helly_number_minimal(sys),
               tag + ": helly differs from minimal-subfamily oracle");
    for (const GradedKind kind :
         {GradedKind::radon, GradedKind::helly, GradedKind::colorful_helly}) {
      const GradedProfile prof = graded(sys, kind, 3);
      for (std::size_t t = 1; t <= 3; ++t)
        out.expect(prof.at(t) == oracles::graded_value(sys, kind, t),
                   tag + ": graded profile differs at t = " + std::to_string(t));
    }
  });
  out.expect(count == 112, "corpus size changed");
  const double secs = seconds_since(start);
  out.expect(secs < 10.0, "took " + std::to_string(secs) + " s, bound is 10 s");
  return out;
}

// 2. graded Radon values never exceed t + 1
Outcome criterion_radon_bound() {
  Outcome out;
  const auto ex = verify_radon_bound(CorpusSpec::parse("exhaustive:3,3"), 6);
  out.expect(ex.ok && ex.checked == 112, "exhaustive corpus: " + ex.detail);
  const auto rnd = verify_radon_bound(CorpusSpec::parse("random:1000:1"), 6);
  out.expect(rnd.ok && rnd.checked == 1000, "random corpus: " + rnd.detail);
  return out;
}

// 3. graded Helly stays strictly below graded Radon on empty intersections
Outcome criterion_levi() {
  Outcome out;
  const auto ex = verify_levi(CorpusSpec::parse("exhaustive:3,3"), 6);
  out.expect(ex.ok, "exhaustive corpus: " + ex.detail);
  out.expect(ex.checked + ex.skipped == 112, "exhaustive corpus visit count changed");
  const auto rnd = verify_levi(CorpusSpec::parse("random:1000:1"), 6);
  out.expect(rnd.ok, "random corpus: " + rnd.detail);
  return out;
}

// 4. profile growth law, plus exact realization of chosen profiles
Outcome criterion_growth_law() {
  Outcome out;
  const auto ex = verify_helly_growth(CorpusSpec::parse("exhaustive:3,3"), 6);
  out.expect(ex.ok, "exhaustive corpus: " + ex.detail);
  const auto rnd = verify_helly_growth(CorpusSpec::parse("random:1000:1"), 6);
  out.expect(rnd.ok, "random corpus: " + rnd.detail);

  const std::vector<std::vector<unsigned>> targets = {
      {1, 1, 1, 1, 1, 1, 1}, {1, 2, 2, 2, 2, 2, 2}, {1, 2, 3, 3, 3, 3, 3},
      {1, 2, 3, 4, 4, 4, 4}, {1, 2, 3, 4, 5, 5, 5}, {1, 2, 3, 4, 5, 6, 6},
      {1, 2, 3, 4, 5, 6, 7}, {1, 1, 3, 3, 3, 3, 3}, {1, 1, 3, 4, 4, 6, 6},
      {1, 2, 2, 4, 4, 4, 7}};
  for (const auto& u : targets) {
    const auto fam = gen_helly_sequence(u);
    const GradedProfile prof = graded(fam.system, GradedKind::helly, 7);
    if (prof.values != u) {
      std::string shown;
      for (unsigned v : u) shown += std::to_string(v);
      out.fail("realized profile differs from u = " + shown);
      break;
    }
  }
  return out;
}

// 5. binary-word families are minimally non-partitionable, k = 5 within 60 s
Outcome criterion_binary_words() {
  Outcome out;
  for (std::size_t k = 3; k <= 5; ++k) {
    const auto start = std::chrono::steady_clock::now();
    const auto fam = gen_binary_words(k);
    const auto verdict = verify_minimal_nonpartitionable(fam.system, fam.s);
    out.expect(verdict.kind == MinimalityVerdict::Kind::minimal,
               "k = " + std::to_string(k) + " is not minimal");
    if (k == 5) {
      out.expect(fam.system.ground_size == 32768 && fam.system.size() == 30,
                 "k = 5 family shape changed");
      const double secs = seconds_since(start);
      out.expect(secs < 60.0, "k = 5 took " + std::to_string(secs) + " s, bound is 60 s");
    }
  }
  out.expect(radon_number(gen_binary_words(3).system) > 3, "rad(k = 3 family) is not above 3");
  return out;
}

// 6. ring boxes realize the shatter profile f = (1,1,2,3,5) exactly
Outcome criterion_shatter_family() {
  Outcome out;
  const std::vector<unsigned> f = {1, 1, 2, 3, 5};
  const auto fam = gen_shatter_family(f);
  for (std::size_t t = 1; t <= 5; ++t)
    out.expect(shatter_value(fam.system, 0, t) == f[t - 1],
               "shatter value off at t = " + std::to_string(t));
  for (std::size_t i = 1; i <= 5; ++i) {
    const MemberMask box = fam.box_members(i);
    const auto full = betti(fam.system, box, 0);
    out.expect(!full.empty_intersection && full.reduced[0] == f[i - 1],
               "box " + std::to_string(i) + " full intersection has the wrong component count");
    for (MemberMask sub = (box - 1) & box; sub; sub = (sub - 1) & box) {
      const auto bv = betti(fam.system, sub, 0);
      if (bv.empty_intersection || bv.reduced[0] != 0) {
        out.fail("box " + std::to_string(i) + " has a disconnected proper sub-intersection");
        break;
      }
    }
  }
  return out;
}

// 7. homology bookkeeping is sound: Euler identity, an independent
// component count, and rank against naive elimination
Outcome criterion_homology_soundness() {
  Outcome out;
  const std::vector<std::size_t> dims = {64, 64};
  Rng rng(2718);
  for (std::size_t trial = 0; trial < 100 && out.ok; ++trial) {
    Bitset cells(64 * 64);
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (rng.bernoulli(0.5)) cells.set(c);
    const ChainComplex cx = build_complex(cells, dims);
    const std::vector<unsigned> b = betti_unreduced(cells, dims, 2);
    long long cell_sum = 0, betti_sum = 0;
    for (std::size_t q = 0; q <= 2; ++q) {
      cell_sum += (q % 2 ? -1LL : 1LL) * static_cast<long long>(cx.count(q));
      betti_sum += (q % 2 ? -1LL : 1LL) * static_cast<long long>(b[q]);
    }
    out.expect(cell_sum == betti_sum, "Euler identity broken on trial " + std::to_string(trial));
    out.expect(component_count(cells, dims) == b[0],
               "union-find count disagrees on trial " + std::to_string(trial));
  }

  Rng mrng(577);
  for (std::size_t trial = 0; trial < 1000 && out.ok; ++trial) {
    const std::size_t r = 1 + mrng.below(200);
    const std::size_t c = 1 + mrng.below(200);
    Gf2Matrix m(r, c);
    std::vector<std::vector<int>> naive(r, std::vector<int>(c, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (mrng.bernoulli(0.5)) {
          m.set(i, j);
          naive[i][j] = 1;
        }
    out.expect(gf2_rank(std::move(m)) == oracles::gf2_rank(std::move(naive)),
               "rank mismatch on matrix trial " + std::to_string(trial));
  }
  return out;
}

// 8. gate function cases and monotonicity over the surrogate tables
Outcome criterion_gate_function() {
  Outcome out;
  const PsiTables t = doubling_tables();
  out.expect(psi_eval(t, 2, 3) == 1, "first case value changed");
  out.expect(psi_eval(t, 2, 10) == 2, "second case value changed");
  out.expect(psi_eval(t, 2, 21) == 3, "third case value changed");
  out.expect(psi_eval(t, 2, 64) == 5, "third case upper value changed");
  unsigned prev = 0;
  for (std::uint64_t arg = 1; arg <= 64; ++arg) {
    const unsigned v = psi_eval(t, 2, arg);
    out.expect(v >= prev, "decrease at t = " + std::to_string(arg));
    prev = v;
  }
  return out;
}

// 9. probe values on the four-blocks construction, exact and sampled
Outcome criterion_probe_values() {
  Outcome out;
  const SetSystem sys = block_system(4, 10);
  const TupleFraction exact = intersecting_tuple_fraction(sys, 2);
  out.expect(exact.exact && exact.hits == 180 && exact.total == 780,
             "exact tuple count changed");
  const DepthResult depth = max_depth_fraction(sys);
  out.expect(depth.fraction == 0.25, "depth fraction is not exactly 1/4");

  TupleFractionOptions opts;
  opts.exact_budget = 1;  // force sampling
  opts.samples = 50000;
  opts.seed = 2026;
  const TupleFraction sampled = intersecting_tuple_fraction(sys, 2, opts);
  out.expect(!sampled.exact && sampled.total == 50000 && sampled.hits == 11649,
             "sampled fingerprint changed, hits = " + std::to_string(sampled.hits));
  return out;
}

// 10. full 256x256 grid homology lands under the time budget
Outcome criterion_performance() {
  Outcome out;
  const std::vector<std::size_t> dims = {256, 256};
  Bitset cells(256 * 256);
  for (std::size_t c = 0; c < cells.size(); ++c) cells.set(c);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<unsigned> b = betti_unreduced(cells, dims, 1);
  const double secs = seconds_since(start);
  out.expect(b[0] == 1 && b[1] == 0, "full grid is not contractible");
  out.expect(secs < 5.0, "took " + std::to_string(secs) + " s, bound is 5 s");
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*run)();
  };
  const Entry entries[] = {
      {"oracle equivalence on the tiny-system corpus", criterion_oracle_equivalence},
      {"graded Radon bound", criterion_radon_bound},
      {"graded Helly below graded Radon", criterion_levi},
      {"profile growth law and realization", criterion_growth_law},
      {"binary-word minimal non-partitionability", criterion_binary_words},
      {"shatter profile realization", criterion_shatter_family},
      {"homology soundness against independent routes", criterion_homology_soundness},
      {"gate function cases and monotonicity", criterion_gate_function},
      {"fractional-Helly probe values", criterion_probe_values},
      {"256x256 grid homology under 5 s", criterion_performance},
  };
  bool all = true;
  for (std::size_t i = 0; i < std::size(entries); ++i) {
    const Outcome out = entries[i].run();
    all = all && out.ok;
    std::printf("criterion %zu: %s (%s)%s%s\n", i + 1, out.ok ? "PASS" : "FAIL",
                entries[i].name, out.detail.empty() ? "" : " - ", out.detail.c_str());
  }
  return all ? 0 : 1;
}
