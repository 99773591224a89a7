#include <doctest.h>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "convexlab/error.hpp"
#include "convexlab/generators.hpp"
#include "convexlab/io.hpp"
#include "convexlab/parameters.hpp"
#include "convexlab/set_system.hpp"
#include "convexlab/verify.hpp"
#include "oracles.hpp"

using convexlab::CorpusSpec;
using convexlab::first_profile_law_violation;
using convexlab::input_error;
using convexlab::MinimalityVerdict;
using convexlab::PointSet;
using convexlab::SetSystem;

namespace {

std::string serialized(const SetSystem& sys) {
  std::ostringstream out;
  convexlab::write_set_system(out, {sys, {}});
  return out.str();
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("corpus specs parse and describe round-trip") {
    const auto ex = CorpusSpec::parse("exhaustive:3,2");
    CHECK(ex.kind == CorpusSpec::Kind::exhaustive);
    CHECK(ex.max_ground == 3);
    CHECK(ex.max_members == 2);
    CHECK(ex.describe() == "exhaustive:3,2");

    const auto rnd = CorpusSpec::parse("random:100:42");
    CHECK(rnd.kind == CorpusSpec::Kind::random);
    CHECK(rnd.count == 100);
    CHECK(rnd.seed == 42);
    CHECK(rnd.describe() == "random:100:42");
  }

  TEST_CASE("corpus spec errors name the problem") {
    CHECK_THROWS_AS(CorpusSpec::parse("exhaustive"), input_error);
    CHECK_THROWS_AS(CorpusSpec::parse("exhaustive:3"), input_error);
    CHECK_THROWS_AS(CorpusSpec::parse("random:5"), input_error);
    CHECK_THROWS_AS(CorpusSpec::parse("bogus:1,2"), input_error);
    CHECK_THROWS_AS(CorpusSpec::parse("exhaustive:0,3"), input_error);
    CHECK_THROWS_AS(CorpusSpec::parse("exhaustive:5,3"), input_error);
    CHECK_THROWS_AS(CorpusSpec::parse("random:x:1"), input_error);
    CHECK_THROWS_AS(CorpusSpec::parse("random:99999999999999999999:1"), input_error);
  }

  TEST_CASE("exhaustive corpus matches the oracle enumerator as a set") {
    // the two walk families in different orders (bitmask value here, prefix
    // recursion in the oracle), so compare sorted
    std::vector<std::string> mine;
    convexlab::for_each_corpus_system(CorpusSpec::parse("exhaustive:3,3"),
                                      [&](const SetSystem& s) { mine.push_back(serialized(s)); });
    std::vector<std::string> oracle;
    oracles::for_each_tiny_system(3, 3,
                                  [&](const SetSystem& s) { oracle.push_back(serialized(s)); });
    REQUIRE(mine.size() == 112);
    REQUIRE(oracle.size() == 112);
    std::sort(mine.begin(), mine.end());
    std::sort(oracle.begin(), oracle.end());
    CHECK(mine == oracle);
  }

  TEST_CASE("smaller exhaustive bounds shrink the corpus") {
    std::size_t count = 0;
    convexlab::for_each_corpus_system(CorpusSpec::parse("exhaustive:2,2"),
                                      [&](const SetSystem&) { ++count; });
    // ground 1: all 4 families fit; ground 2: 1 + 4 + 6 of 16
    CHECK(count == 15);
  }

  TEST_CASE("random corpus is reproducible and within its advertised shape") {
    const auto collect = [](const std::string& spec) {
      std::vector<std::string> out;
      convexlab::for_each_corpus_system(CorpusSpec::parse(spec), [&](const SetSystem& s) {
        CHECK(s.ground_size >= 2);
        CHECK(s.ground_size <= 10);
        CHECK(s.size() >= 1);
        CHECK(s.size() <= 6);
        out.push_back(serialized(s));
      });
      return out;
    };
    const auto a = collect("random:25:5");
    const auto b = collect("random:25:5");
    CHECK(a.size() == 25);
    CHECK(a == b);
  }

  TEST_CASE("graded Radon bound holds exhaustively") {
    const auto rep = convexlab::verify_radon_bound(CorpusSpec::parse("exhaustive:3,3"), 6);
    CHECK(rep.ok);
    CHECK(rep.checked == 112);
    CHECK(rep.skipped == 0);
    CHECK_FALSE(rep.system.has_value());
  }

  TEST_CASE("strict slack zero is caught, with a replayable counterexample") {
    const auto rep = convexlab::verify_radon_bound(CorpusSpec::parse("exhaustive:2,2"), 3, 0);
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.system.has_value());
    REQUIRE(rep.t.has_value());
    REQUIRE(rep.points.has_value());
    CHECK(rep.detail == "graded Radon value 2 at t = 1 exceeds 1");
    CHECK(*rep.t == 1);
    CHECK(*rep.points == PointSet{0});

    // round-trip the payload through the text format and reproduce the hit
    std::ostringstream out;
    convexlab::write_set_system(out, {*rep.system, {}});
    std::istringstream in(out.str());
    const auto back = convexlab::parse_set_system(in, "replay");
    const auto prof = convexlab::graded(back.system, convexlab::GradedKind::radon, *rep.t);
    CHECK(prof.at(*rep.t) > *rep.t);
  }

  TEST_CASE("graded Helly stays below graded Radon when nothing is shared") {
    const auto rep = convexlab::verify_levi(CorpusSpec::parse("exhaustive:3,3"), 6);
    CHECK(rep.ok);
    CHECK(rep.skipped > 0);  // families with a common point are excluded
    CHECK(rep.checked + rep.skipped == 112);

    const auto rnd = convexlab::verify_levi(CorpusSpec::parse("random:100:3"), 5);
    CHECK(rnd.ok);
    CHECK(rnd.checked + rnd.skipped == 100);
  }

  TEST_CASE("profile growth law accepts jumps onto t and nothing else") {
    using V = std::vector<unsigned>;
    CHECK(first_profile_law_violation(V{}) == std::nullopt);
    CHECK(first_profile_law_violation(V{1, 1, 3}) == std::nullopt);  // jump lands on t = 3
    CHECK(first_profile_law_violation(V{1, 2, 2}) == std::nullopt);
    CHECK(first_profile_law_violation(V{1, 2, 3, 4}) == std::nullopt);
    CHECK(first_profile_law_violation(V{1, 1, 1, 4}) == std::nullopt);
    CHECK(first_profile_law_violation(V{0, 0, 0}) == std::nullopt);

    CHECK(first_profile_law_violation(V{1, 1, 2}) == 3);  // strict rise missing t
    CHECK(first_profile_law_violation(V{2}) == 1);        // above its index
    CHECK(first_profile_law_violation(V{1, 0}) == 2);     // decrease
    CHECK(first_profile_law_violation(V{1, 3, 3}) == 2);  // above its index mid-profile
  }

  TEST_CASE("growth law holds on both corpus kinds") {
    const auto ex = convexlab::verify_helly_growth(CorpusSpec::parse("exhaustive:3,3"), 6);
    CHECK(ex.ok);
    CHECK(ex.checked == 112);
    const auto rnd = convexlab::verify_helly_growth(CorpusSpec::parse("random:100:7"), 5);
    CHECK(rnd.ok);
  }

  TEST_CASE("binary-word points are minimally non-partitionable") {
    const auto fam = convexlab::gen_binary_words(3);
    const auto verdict = convexlab::verify_minimal_nonpartitionable(fam.system, fam.s);
    CHECK(verdict.kind == MinimalityVerdict::Kind::minimal);
    CHECK_FALSE(verdict.witness_partition.has_value());
    CHECK_FALSE(verdict.redundant_member.has_value());
  }

  TEST_CASE("a duplicated member is reported as redundant") {
    auto fam = convexlab::gen_binary_words(3);
    fam.system.add(fam.system.sets[0]);
    const auto verdict = convexlab::verify_minimal_nonpartitionable(fam.system, fam.s);
    REQUIRE(verdict.kind == MinimalityVerdict::Kind::not_minimal);
    CHECK(*verdict.redundant_member == 0);
  }

  TEST_CASE("partitionable points come back with the split") {
    const auto sys = oracles::sys_of_strings({"11"});
    const auto verdict = convexlab::verify_minimal_nonpartitionable(sys, PointSet{0, 1});
    REQUIRE(verdict.kind == MinimalityVerdict::Kind::not_nonpartitionable);
    REQUIRE(verdict.witness_partition.has_value());
    CHECK(verdict.witness_partition->block0 == PointSet{0});
    CHECK(verdict.witness_partition->block1 == PointSet{1});
  }
}
