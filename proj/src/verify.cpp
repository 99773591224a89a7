#include "convexlab/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "convexlab/enumeration.hpp"
#include "convexlab/error.hpp"
#include "convexlab/parameters.hpp"
#include "convexlab/rng.hpp"

namespace convexlab {

CorpusSpec CorpusSpec::parse(const std::string& text) {
  CorpusSpec spec;
  const auto bad = [&](const std::string& why) {
    return input_error("corpus spec '" + text + "': " + why);
  };
  const auto number = [&](const std::string& part) -> std::uint64_t {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw bad("'" + part + "' is not a number");
    try {
      return std::stoull(part);
    } catch (const std::out_of_range&) {
      throw bad("'" + part + "' is out of range");
    }
  };
  const std::size_t colon = text.find(':');
  const std::string head = text.substr(0, colon);
  if (head == "exhaustive") {
    if (colon == std::string::npos) throw bad("expected exhaustive:GROUND,MEMBERS");
    const std::string rest = text.substr(colon + 1);
    const std::size_t comma = rest.find(',');
    if (comma == std::string::npos) throw bad("expected exhaustive:GROUND,MEMBERS");
    spec.kind = Kind::exhaustive;
    spec.max_ground = number(rest.substr(0, comma));
    spec.max_members = number(rest.substr(comma + 1));
    if (spec.max_ground == 0 || spec.max_ground > 4)
      throw bad("exhaustive ground must be 1..4");
    return spec;
  }
  if (head == "random") {
    if (colon == std::string::npos) throw bad("expected random:COUNT:SEED");
    const std::string rest = text.substr(colon + 1);
    const std::size_t second = rest.find(':');
    if (second == std::string::npos) throw bad("expected random:COUNT:SEED");
    spec.kind = Kind::random;
    spec.count = number(rest.substr(0, second));
    spec.seed = number(rest.substr(second + 1));
    return spec;
  }
  throw bad("unknown corpus kind '" + head + "'");
}

std::string CorpusSpec::describe() const {
  if (kind == Kind::exhaustive)
    return "exhaustive:" + std::to_string(max_ground) + "," + std::to_string(max_members);
  return "random:" + std::to_string(count) + ":" + std::to_string(seed);
}

void for_each_corpus_system(const CorpusSpec& spec,
                            const std::function<void(const SetSystem&)>& fn) {
  if (spec.kind == CorpusSpec::Kind::exhaustive) {
    for (std::size_t n = 1; n <= spec.max_ground; ++n) {
      const std::size_t subsets = std::size_t{1} << n;
      // families of distinct subsets in increasing bit-value order; a family
      // is a subset of the power set, enumerated by mask
      const std::size_t families = std::size_t{1} << subsets;
      for (std::size_t fm = 0; fm < families; ++fm) {
        if (static_cast<std::size_t>(std::popcount(fm)) > spec.max_members) continue;
        SetSystem sys;
        sys.ground_size = n;
        for (std::size_t sub = 0; sub < subsets; ++sub) {
          if (!((fm >> sub) & 1)) continue;
          Bitset s(n);
          for (std::size_t x = 0; x < n; ++x)
            if ((sub >> x) & 1) s.set(x);
          sys.add(s);
        }
        fn(sys);
      }
    }
    return;
  }
  Rng rng(spec.seed);
  for (std::size_t i = 0; i < spec.count; ++i) {
    SetSystem sys;
    sys.ground_size = 2 + rng.below(9);  // 2..10
    const std::size_t members = 1 + rng.below(6);
    for (std::size_t j = 0; j < members; ++j) {
      Bitset s(sys.ground_size);
      for (std::size_t x = 0; x < sys.ground_size; ++x)
        if (rng.bernoulli(0.5)) s.set(x);
      sys.add(s);
    }
    fn(sys);
  }
}

VerifyReport verify_radon_bound(const CorpusSpec& spec, std::size_t t_max, std::size_t slack) {
  VerifyReport rep;
  for_each_corpus_system(spec, [&](const SetSystem& sys) {
    if (!rep.ok) return;
    ++rep.checked;
    const GradedProfile prof = graded(sys, GradedKind::radon, t_max);
    for (std::size_t t = 1; t <= t_max; ++t) {
      if (prof.at(t) <= t + slack) continue;
      rep.ok = false;
      rep.t = t;
      rep.system = sys;
      rep.detail = "graded Radon value " + std::to_string(prof.at(t)) + " at t = " +
                   std::to_string(t) + " exceeds " + std::to_string(t + slack);
      // hunt the witness multiset: some subfamily of size <= t keeps a
      // point multiset of size t + slack from splitting
      std::vector<std::size_t> all(sys.size());
      for (std::size_t i = 0; i < sys.size(); ++i) all[i] = i;
      for (std::size_t e = 0; e <= std::min(t, sys.size()) && !rep.points; ++e) {
        for_each_subfamily_of_size(all, e, [&](MemberMask sub) {
          auto witness = find_nonpartitionable(sys, sub, t + slack);
          if (witness) {
            rep.points = std::move(witness);
            return false;
          }
          return true;
        });
      }
      if (!rep.points && t + slack < 2) rep.points = PointSet{0};  // any single point
      return;
    }
  });
  return rep;
}

VerifyReport verify_levi(const CorpusSpec& spec, std::size_t t_max) {
  VerifyReport rep;
  for_each_corpus_system(spec, [&](const SetSystem& sys) {
    if (!rep.ok) return;
    if (sys.intersection_of_all().any()) {
      ++rep.skipped;  // the inequality only claims anything for empty intersections
      return;
    }
    ++rep.checked;
    const GradedProfile helly = graded(sys, GradedKind::helly, t_max);
    const GradedProfile radon = graded(sys, GradedKind::radon, t_max);
    for (std::size_t t = 1; t <= t_max; ++t) {
      if (helly.at(t) + 1 <= radon.at(t)) continue;
      rep.ok = false;
      rep.t = t;
      rep.system = sys;
      rep.detail = "graded Helly value " + std::to_string(helly.at(t)) +
                   " reaches graded Radon value " + std::to_string(radon.at(t)) + " at t = " +
                   std::to_string(t);
      return;
    }
  });
  return rep;
}

std::optional<std::size_t> first_profile_law_violation(const std::vector<unsigned>& values) {
  unsigned prev = 0;
  for (std::size_t t = 1; t <= values.size(); ++t) {
    const unsigned cur = values[t - 1];
    if (cur < prev || cur > t) return t;
    if (cur > prev && cur != t) return t;
    prev = cur;
  }
  return std::nullopt;
}

VerifyReport verify_helly_growth(const CorpusSpec& spec, std::size_t t_max) {
  VerifyReport rep;
  for_each_corpus_system(spec, [&](const SetSystem& sys) {
    if (!rep.ok) return;
    ++rep.checked;
    const GradedProfile prof = graded(sys, GradedKind::helly, t_max);
    if (const auto t = first_profile_law_violation(prof.values)) {
      rep.ok = false;
      rep.t = *t;
      rep.system = sys;
      rep.detail = "graded Helly profile jumps to " + std::to_string(prof.at(*t)) +
                   " at t = " + std::to_string(*t) + " without landing on t";
    }
  });
  return rep;
}

MinimalityVerdict verify_minimal_nonpartitionable(const SetSystem& sys, const PointSet& points) {
  MinimalityVerdict verdict;
  HullContext ctx(sys);
  const MemberMask all = full_mask(sys);
  if (auto split = find_radon_partition(ctx, all, points)) {
    verdict.kind = MinimalityVerdict::Kind::not_nonpartitionable;
    verdict.witness_partition = std::move(split);
    return verdict;
  }
  for (std::size_t j = 0; j < sys.size(); ++j) {
    if (!has_radon_partition(ctx, all & ~(MemberMask{1} << j), points)) {
      verdict.kind = MinimalityVerdict::Kind::not_minimal;
      verdict.redundant_member = j;
      return verdict;
    }
  }
  verdict.kind = MinimalityVerdict::Kind::minimal;
  return verdict;
}

}  // namespace convexlab
