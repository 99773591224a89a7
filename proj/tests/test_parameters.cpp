#include <doctest.h>

#include <algorithm>

#include "convexlab/error.hpp"
#include "convexlab/parameters.hpp"
#include "convexlab/rng.hpp"
#include "oracles.hpp"

using namespace convexlab;
using oracles::sys_of;
using oracles::sys_of_strings;

namespace {

SetSystem random_system(Rng& rng, std::size_t ground, std::size_t members, double p = 0.5) {
  SetSystem sys;
  sys.ground_size = ground;
  for (std::size_t i = 0; i < members; ++i) {
    Bitset b(ground);
    for (std::size_t x = 0; x < ground; ++x)
      if (rng.bernoulli(p)) b.set(x);
    sys.sets.push_back(b);
  }
  return sys;
}

}  // namespace

TEST_SUITE("parameters") {

TEST_CASE("radon number of the one-set system is 2") {
  CHECK(radon_number(sys_of(2, {{0, 1}})) == 2);
  CHECK(radon_number(sys_of(5, {{0, 1, 2, 3, 4}})) == 2);
}

TEST_CASE("radon number of two disjoint singletons is 3") {
  // the only split of {0,1} has hulls {0} and {1}; any size-3 multiset
  // repeats an element
  CHECK(radon_number(sys_of(2, {{0}, {1}})) == 3);
}

TEST_CASE("radon witness is a non-partitionable set one below the number") {
  auto sys = sys_of(2, {{0}, {1}});
  auto r = radon_number_with_witness(sys, full_mask(sys));
  CHECK(r.number == 3);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->size() == 2);
  HullContext ctx(sys);
  CHECK(!has_radon_partition(ctx, full_mask(sys), *r.witness));
}

TEST_CASE("radon number matches the oracle on random systems") {
  Rng rng(202);
  for (int rep = 0; rep < 120; ++rep) {
    auto sys = random_system(rng, 1 + rng.below(4), 1 + rng.below(4));
    CHECK(radon_number(sys) == oracles::radon_number(sys));
  }
}

TEST_CASE("radon and helly numbers survive quotienting") {
  Rng rng(303);
  for (int rep = 0; rep < 80; ++rep) {
    auto sys = random_system(rng, 2 + rng.below(4), 1 + rng.below(4));
    auto q = quotient(sys);
    CHECK(radon_number(sys) == radon_number(q.system));
    CHECK(helly_number(sys) == helly_number(q.system));
  }
}

TEST_CASE("helly number of a nested chain is 1") {
  CHECK(helly_number(sys_of(4, {{0, 1, 2, 3}, {0, 1, 2}, {0, 1}, {0}})) == 1);
}

TEST_CASE("helly number via minimal families matches both oracles exhaustively") {
  // every system with up to 4 distinct members over ground up to 4
  oracles::for_each_tiny_system(4, 4, [&](const SetSystem& sys) {
    const unsigned fast = helly_number(sys);
    CHECK(fast == oracles::helly_number_minimal(sys));
    CHECK(fast == oracles::helly_number_direct(sys));
  });
}

TEST_CASE("minimal empty subfamilies respect the size cap") {
  // three sets with pairwise intersections but empty triple intersection
  auto sys = sys_of_strings({"110", "011", "101"});
  CHECK(minimal_empty_subfamilies(sys, full_mask(sys), 3).size() == 1);
  CHECK(minimal_empty_subfamilies(sys, full_mask(sys), 2).empty());
  CHECK(helly_number(sys) == 3);
}

TEST_CASE("colorful check distinguishes the three verdicts") {
  // all share ground element 0
  auto shared = sys_of(3, {{0, 1}, {0, 2}, {0}});
  Coloring two_colors{{0, 1, 0}, 2};
  CHECK(colorful_check(shared, full_mask(shared), two_colors) ==
        ColorfulVerdict::conclusion_holds);

  // A={0,1}, B={2,3}, C={0,2}, D={1,3}: all cross pairs meet, both classes
  // are disjoint pairs
  auto cross = sys_of(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
  Coloring ab_cd{{0, 0, 1, 1}, 2};
  CHECK(colorful_check(cross, full_mask(cross), ab_cd) == ColorfulVerdict::counterexample);

  // colorful tuple (A, D') with A={0}, D'={1} is disjoint
  auto split = sys_of(2, {{0}, {1}});
  Coloring singles{{0, 1}, 2};
  CHECK(colorful_check(split, full_mask(split), singles) == ColorfulVerdict::hypothesis_fails);
}

TEST_CASE("colorful check validates the coloring") {
  auto sys = sys_of(2, {{0}, {1}});
  CHECK_THROWS_AS(colorful_check(sys, full_mask(sys), Coloring{{0, 0}, 2}), input_error);
  CHECK_THROWS_AS(colorful_check(sys, full_mask(sys), Coloring{{0, 2}, 2}), input_error);
  CHECK_THROWS_AS(colorful_check(sys, full_mask(sys), Coloring{{0}, 1}), input_error);
}

TEST_CASE("colorful helly number basics") {
  CHECK(colorful_helly_number(sys_of(3, {{0, 1}, {0, 2}, {0}})) == 1);

  // the cross construction defeats every 2-coloring but not 3 colors
  auto cross = sys_of(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
  CHECK(colorful_helly_number(cross) == 3);
  CHECK(oracles::colorful_helly_number(cross) == 3);
}

TEST_CASE("colorful helly number matches the oracle on random systems") {
  Rng rng(404);
  for (int rep = 0; rep < 40; ++rep) {
    auto sys = random_system(rng, 1 + rng.below(3), 1 + rng.below(4));
    CHECK(colorful_helly_number(sys) == oracles::colorful_helly_number(sys));
  }
}

TEST_CASE("colorful helly guard") {
  SetSystem sys;
  sys.ground_size = 2;
  for (int i = 0; i < 11; ++i) sys.sets.push_back(Bitset::full(2));
  CHECK_THROWS_AS(colorful_helly_number(sys), size_error);
  CHECK(colorful_helly_number(sys, ColorfulOptions{11}) == 1);
}

TEST_CASE("graded profiles match the oracle on random systems") {
  Rng rng(505);
  for (int rep = 0; rep < 25; ++rep) {
    auto sys = random_system(rng, 1 + rng.below(3), 1 + rng.below(3));
    const std::size_t t_max = 3;
    auto rad = graded(sys, GradedKind::radon, t_max);
    auto hel = graded(sys, GradedKind::helly, t_max);
    auto col = graded(sys, GradedKind::colorful_helly, t_max);
    for (std::size_t t = 1; t <= t_max; ++t) {
      CHECK(rad.at(t) == oracles::graded_value(sys, GradedKind::radon, t));
      CHECK(hel.at(t) == oracles::graded_value(sys, GradedKind::helly, t));
      CHECK(col.at(t) == oracles::graded_value(sys, GradedKind::colorful_helly, t));
    }
  }
}

TEST_CASE("graded radon stays within the pigeonhole bounds") {
  Rng rng(606);
  for (int rep = 0; rep < 30; ++rep) {
    auto sys = random_system(rng, 2 + rng.below(5), 1 + rng.below(5));
    auto rad = graded(sys, GradedKind::radon, 5);
    for (std::size_t t = 1; t <= 5; ++t) {
      CHECK(rad.at(t) <= t + 1);
      // the strict power bound only kicks in at t = 2: any nonempty family
      // has rad over a single member exactly 2 = 2^1
      if (t == 1)
        CHECK(rad.at(t) == 2);
      else
        CHECK(rad.at(t) < (1u << t));
      if (t > 1) CHECK(rad.at(t) >= rad.at(t - 1));
    }
  }
}

TEST_CASE("graded profiles extend past the family size as constants") {
  auto sys = sys_of(2, {{0}, {1}});
  auto rad = graded(sys, GradedKind::radon, 5);
  CHECK(rad.values == std::vector<unsigned>{2, 3, 3, 3, 3});
}

TEST_CASE("graded handles the empty family") {
  SetSystem sys;
  sys.ground_size = 2;
  CHECK(graded(sys, GradedKind::radon, 2).values == std::vector<unsigned>{2, 2});
  CHECK(graded(sys, GradedKind::helly, 2).values == std::vector<unsigned>{1, 1});
  CHECK(graded(sys, GradedKind::colorful_helly, 2).values == std::vector<unsigned>{1, 1});
}

TEST_CASE("graded helly of single members with an empty set present") {
  // {} as a member is a minimal empty subfamily of size 1
  auto sys = sys_of(2, {{}, {0, 1}});
  auto hel = graded(sys, GradedKind::helly, 2);
  CHECK(hel.values == std::vector<unsigned>{1, 1});
}

TEST_CASE("find_nonpartitionable returns sets of the requested size only") {
  auto sys = sys_of(2, {{0}, {1}});
  auto w2 = find_nonpartitionable(sys, full_mask(sys), 2);
  REQUIRE(w2.has_value());
  CHECK(w2->size() == 2);
  CHECK(!find_nonpartitionable(sys, full_mask(sys), 3).has_value());
}

}  // TEST_SUITE
