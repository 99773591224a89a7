#pragma once

// Shared subset-enumeration helpers. Orders are part of the contract:
// combinations are lexicographic, which makes subfamily masks over increasing
// member indices come out in increasing numeric order.

#include <bit>
#include <cstddef>
#include <vector>

#include "convexlab/set_system.hpp"

namespace convexlab {

inline std::vector<std::size_t> mask_members(MemberMask m) {
  std::vector<std::size_t> v;
  while (m) {
    v.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return v;
}

// lexicographic k-combinations of {0..n-1}; fn returns false to stop early
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& fn) {
  if (k > n) return;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (!fn(static_cast<const std::vector<std::size_t>&>(c))) return;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// masks with exactly k of the given members set, in lexicographic member order
template <class F>
void for_each_subfamily_of_size(const std::vector<std::size_t>& members, std::size_t k, F&& fn) {
  for_each_combination(members.size(), k, [&](const std::vector<std::size_t>& c) {
    MemberMask m = 0;
    for (std::size_t idx : c) m |= MemberMask{1} << members[idx];
    return fn(m);
  });
}

}  // namespace convexlab
