#pragma once

// Corpus-driven property verification. A corpus is either the exhaustive
// enumeration of tiny systems or a seeded random stream; checks return
// reports with replayable counterexample payloads instead of throwing.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "convexlab/set_system.hpp"

namespace convexlab {

struct CorpusSpec {
  enum class Kind { exhaustive, random };
  Kind kind = Kind::exhaustive;
  // exhaustive: every system with 1..max_ground elements and up to
  // max_members distinct members, listed in increasing bit-value order
  std::size_t max_ground = 3;
  std::size_t max_members = 3;
  // random: count systems, ground 2..10, 1..6 members, density one half
  std::size_t count = 0;
  std::uint64_t seed = 0;

  // "exhaustive:G,M" or "random:COUNT:SEED"
  static CorpusSpec parse(const std::string& text);
  std::string describe() const;
};

void for_each_corpus_system(const CorpusSpec& spec,
                            const std::function<void(const SetSystem&)>& fn);

struct VerifyReport {
  bool ok = true;
  std::size_t checked = 0;  // systems actually checked
  std::size_t skipped = 0;  // systems the property's side condition excludes
  std::string detail;       // one-line description of the first failure
  // counterexample payload, filled on failure
  std::optional<SetSystem> system;
  std::optional<std::size_t> t;
  std::optional<PointSet> points;
};

// graded Radon values stay within t + slack on every corpus member; slack is
// exposed so tests can prove the check would catch a violation
VerifyReport verify_radon_bound(const CorpusSpec& spec, std::size_t t_max = 6,
                                std::size_t slack = 1);

// on members with empty global intersection, the graded Helly value stays
// strictly below the graded Radon value
VerifyReport verify_levi(const CorpusSpec& spec, std::size_t t_max = 6);

// first index where a profile breaks the increase-only-to-t law, if any;
// values above their index or below their predecessor also break it
std::optional<std::size_t> first_profile_law_violation(const std::vector<unsigned>& values);

// every graded Helly profile in the corpus obeys the law
VerifyReport verify_helly_growth(const CorpusSpec& spec, std::size_t t_max = 6);

struct MinimalityVerdict {
  enum class Kind { minimal, not_nonpartitionable, not_minimal };
  Kind kind = Kind::minimal;
  // a full-family split of the points, present when they do partition
  std::optional<Partition2> witness_partition;
  // a member whose removal keeps the points non-partitionable
  std::optional<std::size_t> redundant_member;
};

// checks that points admit no full-family partition but split after every
// single-member removal
MinimalityVerdict verify_minimal_nonpartitionable(const SetSystem& sys, const PointSet& points);

}  // namespace convexlab
