#include <doctest.h>

#include <vector>

#include "convexlab/cubical.hpp"
#include "convexlab/nerve.hpp"
#include "convexlab/rng.hpp"
#include "convexlab/stats.hpp"
#include "oracles.hpp"

using convexlab::MemberMask;
using convexlab::NerveComplex;

TEST_SUITE("nerve") {
  TEST_CASE("pairwise intersections without a common point give a hollow triangle") {
    const auto sys = oracles::sys_of_strings({"110", "011", "101"});
    const NerveComplex nc = convexlab::nerve(sys, 2);
    CHECK(nc.vertex_count == 3);
    CHECK(nc.face_count(0) == 3);
    CHECK(nc.face_count(1) == 3);
    CHECK(nc.face_count(2) == 0);
    CHECK(nc.faces[1] == std::vector<MemberMask>{0b011, 0b101, 0b110});
  }

  TEST_CASE("a common point fills the whole simplex") {
    const auto sys = oracles::sys_of_strings({"1100", "1010", "1001", "1111"});
    const NerveComplex nc = convexlab::nerve(sys, 3);
    for (std::size_t k = 0; k < 4; ++k) {
      std::size_t expect = 1;  // C(4, k+1)
      for (std::size_t i = 0; i < k + 1; ++i) expect = expect * (4 - i) / (i + 1);
      CHECK(nc.face_count(k) == expect);
    }
  }

  TEST_CASE("disjoint members stay isolated vertices") {
    const auto sys = oracles::sys_of_strings({"100", "010", "001"});
    const NerveComplex nc = convexlab::nerve(sys, 2);
    CHECK(nc.face_count(0) == 3);
    CHECK(nc.face_count(1) == 0);
    CHECK(nc.face_count(2) == 0);
  }

  TEST_CASE("an empty member never appears as a vertex") {
    const auto sys = oracles::sys_of_strings({"110", "000", "011"});
    const NerveComplex nc = convexlab::nerve(sys, 1);
    CHECK(nc.face_count(0) == 2);
    CHECK(nc.faces[0] == std::vector<MemberMask>{0b001, 0b100});
    CHECK(nc.face_count(1) == 1);
  }

  TEST_CASE("dimension cap truncates the face list") {
    const auto sys = oracles::sys_of_strings({"1111", "1111", "1111"});
    const NerveComplex nc = convexlab::nerve(sys, 0);
    CHECK(nc.dim_cap == 0);
    CHECK(nc.faces.size() == 1);
    CHECK(nc.face_count(0) == 3);
    CHECK(nc.face_count(5) == 0);
  }

  TEST_CASE("face counts match exact intersecting tuple counts") {
    convexlab::Rng rng(314);
    for (int rep = 0; rep < 20; ++rep) {
      convexlab::SetSystem sys;
      sys.ground_size = 1 + rng.below(6);
      const std::size_t n = 1 + rng.below(5);
      for (std::size_t i = 0; i < n; ++i) {
        convexlab::Bitset s(sys.ground_size);
        for (std::size_t x = 0; x < sys.ground_size; ++x)
          if (rng.bernoulli(0.6)) s.set(x);
        sys.add(s);
      }
      const NerveComplex nc = convexlab::nerve(sys, n ? n - 1 : 0);
      for (std::size_t s = 1; s <= n; ++s) {
        const auto tf = convexlab::intersecting_tuple_fraction(sys, s);
        REQUIRE(tf.exact);
        CHECK(nc.face_count(s - 1) == tf.hits);
      }
    }
  }

  TEST_CASE("cubical systems use their cell intersections") {
    const std::vector<std::size_t> dims{2, 2};
    convexlab::Bitset a(4), b(4), c(4);
    a.set(0);
    a.set(1);
    b.set(1);
    b.set(2);
    c.set(3);
    const convexlab::CubicalSetSystem sys{dims, {a, b, c}};
    const NerveComplex nc = convexlab::nerve(sys, 2);
    CHECK(nc.face_count(0) == 3);
    CHECK(nc.faces[1] == std::vector<MemberMask>{0b011});
    CHECK(nc.face_count(2) == 0);
  }
}
