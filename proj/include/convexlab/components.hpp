#pragma once

// Connected components of a set of top cells by union-find, where two cells
// touch when their closures share any face (edge, corner, ...). Kept apart
// from the rank-based homology path on purpose: it is the independent
// cross-check for degree-0 counts, so it must not share code with it.

#include <cstddef>
#include <numeric>
#include <vector>

#include "convexlab/bitset.hpp"
#include "convexlab/error.hpp"

namespace convexlab {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

inline std::size_t component_count(const Bitset& top_cells,
                                   const std::vector<std::size_t>& dims) {
  const std::size_t d = dims.size();
  if (d == 0) throw input_error("component count needs at least one axis");
  std::size_t expect = 1;
  for (std::size_t e : dims) expect *= e;
  if (top_cells.size() != expect) throw input_error("cell set size does not match the grid");

  UnionFind uf(expect);
  std::size_t components = 0;
  std::vector<std::size_t> coord(d), other(d);
  top_cells.for_each_set([&](std::size_t idx) {
    ++components;
    std::size_t rem = idx;
    for (std::size_t a = d; a-- > 0;) {
      coord[a] = rem % dims[a];
      rem /= dims[a];
    }
    // offsets in {-1,0,1}^d; scanning ascending indices, merging with the
    // smaller-index neighbors alone already links every touching pair
    std::vector<int> off(d, -1);
    while (true) {
      bool ok = true;
      std::size_t nidx = 0;
      for (std::size_t a = 0; a < d && ok; ++a) {
        const long long c = static_cast<long long>(coord[a]) + off[a];
        if (c < 0 || c >= static_cast<long long>(dims[a])) ok = false;
        else nidx = nidx * dims[a] + static_cast<std::size_t>(c);
      }
      if (ok && nidx < idx && top_cells.test(nidx) && uf.unite(nidx, idx)) --components;
      std::size_t a = d;
      while (a > 0 && off[a - 1] == 1) off[--a] = -1;
      if (a == 0) break;
      ++off[a - 1];
    }
  });
  return components;
}

}  // namespace convexlab
