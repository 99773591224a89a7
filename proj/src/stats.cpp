#include "convexlab/stats.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "convexlab/error.hpp"
#include "convexlab/rng.hpp"

namespace convexlab {

namespace {

// C(n,k) saturating at cap+1 so the exact/sampled decision never overflows
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > cap) return cap + 1;
    // r * (n-k+i) stays exact: r <= cap and factors fit after division
    if (r > std::numeric_limits<std::uint64_t>::max() / (n - k + i)) return cap + 1;
    r = r * (n - k + i) / i;
  }
  return std::min(r, cap + 1);
}

}  // namespace

TupleFraction intersecting_tuple_fraction(const SetSystem& sys, std::size_t s,
                                          TupleFractionOptions opts) {
  const std::size_t n = sys.size();
  if (s == 0 || s > n)
    throw input_error("tuple size " + std::to_string(s) + " outside 1.." + std::to_string(n));

  TupleFraction out;
  const std::uint64_t total = binomial_capped(n, s, opts.exact_budget);
  if (total <= opts.exact_budget) {
    out.exact = true;
    out.total = total;
    std::vector<std::size_t> c(s);
    for (std::size_t i = 0; i < s; ++i) c[i] = i;
    while (true) {
      Bitset inter = sys.sets[c[0]];
      for (std::size_t i = 1; i < s && inter.any(); ++i) inter &= sys.sets[c[i]];
      if (inter.any()) ++out.hits;
      std::size_t i = s;
      while (i > 0 && c[i - 1] == n - s + i - 1) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (std::size_t j = i; j < s; ++j) c[j] = c[j - 1] + 1;
    }
  } else {
    out.exact = false;
    out.total = opts.samples;
    Rng rng(opts.seed);
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::uint64_t rep = 0; rep < opts.samples; ++rep) {
      // partial Fisher-Yates draws s distinct members
      for (std::size_t i = 0; i < s; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(pool[i], pool[j]);
      }
      Bitset inter = sys.sets[pool[0]];
      for (std::size_t i = 1; i < s && inter.any(); ++i) inter &= sys.sets[pool[i]];
      if (inter.any()) ++out.hits;
    }
  }
  out.value = out.total ? static_cast<double>(out.hits) / static_cast<double>(out.total) : 0.0;
  return out;
}

DepthResult max_depth_fraction(const SetSystem& sys) {
  if (sys.size() == 0) throw input_error("depth of an empty family is undefined");
  if (sys.ground_size == 0) throw input_error("depth needs at least one ground element");
  std::vector<std::size_t> depth(sys.ground_size, 0);
  for (const auto& s : sys.sets) s.for_each_set([&](std::size_t x) { ++depth[x]; });
  DepthResult r;
  r.element = 0;
  r.depth = depth[0];
  for (std::size_t x = 1; x < sys.ground_size; ++x)
    if (depth[x] > r.depth) {
      r.depth = depth[x];
      r.element = x;
    }
  r.fraction = static_cast<double>(r.depth) / static_cast<double>(sys.size());
  return r;
}

namespace {

// every k-subset of chosen+i that contains i must intersect; smaller chosen
// sets pass vacuously
bool compatible(const SetSystem& sys, const std::vector<std::size_t>& chosen, std::size_t i,
                std::size_t k) {
  if (chosen.size() + 1 < k) return true;
  const std::size_t need = k - 1;
  std::vector<std::size_t> c(need);
  std::function<bool(std::size_t, std::size_t, const Bitset&)> rec =
      [&](std::size_t start, std::size_t picked, const Bitset& inter) {
        if (picked == need) return inter.any();
        for (std::size_t idx = start; idx + (need - picked) <= chosen.size(); ++idx) {
          Bitset next = inter & sys.sets[chosen[idx]];
          if (!rec(idx + 1, picked + 1, next)) return false;
        }
        return true;
      };
  return rec(0, 0, sys.sets[i]);
}

}  // namespace

CliqueResult max_kwise_clique(const SetSystem& sys, std::size_t k, std::size_t exact_limit) {
  if (k < 2) throw input_error("k-wise clique needs k >= 2");
  const std::size_t n = sys.size();
  full_mask(sys);  // mask-typed result caps the family at 64 members

  CliqueResult best;
  std::vector<std::size_t> chosen;

  if (n <= exact_limit) {
    best.exact = true;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
      if (chosen.size() > best.size) {
        best.size = chosen.size();
        best.members = 0;
        for (std::size_t i : chosen) best.members |= MemberMask{1} << i;
      }
      if (idx == n || chosen.size() + (n - idx) <= best.size) return;
      if (compatible(sys, chosen, idx, k)) {
        chosen.push_back(idx);
        rec(idx + 1);
        chosen.pop_back();
      }
      rec(idx + 1);
    };
    rec(0);
  } else {
    best.exact = false;
    for (std::size_t i = 0; i < n; ++i)
      if (compatible(sys, chosen, i, k)) {
        chosen.push_back(i);
        best.members |= MemberMask{1} << i;
      }
    best.size = chosen.size();
  }
  return best;
}

}  // namespace convexlab
