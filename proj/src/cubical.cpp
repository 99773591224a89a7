#include "convexlab/cubical.hpp"

#include <algorithm>
#include <string>

#include "convexlab/enumeration.hpp"
#include "convexlab/error.hpp"
#include "convexlab/gf2.hpp"

namespace convexlab {

std::size_t CubicalSetSystem::cell_count() const {
  std::size_t n = 1;
  for (std::size_t d : dims) n *= d;
  return dims.empty() ? 0 : n;
}

void CubicalSetSystem::validate() const {
  if (dims.size() < 2 || dims.size() > 3)
    throw input_error("grid dimension " + std::to_string(dims.size()) +
                      " unsupported (2 or 3 axes)");
  for (std::size_t d : dims)
    if (d == 0) throw input_error("grid extents must be positive");
  for (const auto& s : sets)
    if (s.size() != cell_count())
      throw input_error("member has " + std::to_string(s.size()) + " cells, grid has " +
                        std::to_string(cell_count()));
}

SetSystem CubicalSetSystem::as_set_system() const {
  validate();
  return SetSystem{cell_count(), sets};
}

std::size_t cell_index(const std::vector<std::size_t>& coords,
                       const std::vector<std::size_t>& dims) {
  std::size_t idx = 0;
  for (std::size_t a = 0; a < dims.size(); ++a) idx = idx * dims[a] + coords[a];
  return idx;
}

std::vector<std::size_t> cell_coords(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> c(dims.size());
  for (std::size_t a = dims.size(); a-- > 0;) {
    c[a] = index % dims[a];
    index /= dims[a];
  }
  return c;
}

namespace {

// corner vertex in the (dims[a]+1)-wide vertex grid, last axis fastest
CellKey vertex_key(const std::vector<std::size_t>& corner, const std::vector<std::size_t>& dims) {
  CellKey v = 0;
  for (std::size_t a = 0; a < dims.size(); ++a) v = v * (dims[a] + 1) + corner[a];
  return v;
}

CellKey make_key(const std::vector<std::size_t>& corner, unsigned extent,
                 const std::vector<std::size_t>& dims) {
  return (vertex_key(corner, dims) << dims.size()) | extent;
}

std::uint32_t key_position(const std::vector<CellKey>& sorted, CellKey k) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), k);
  return static_cast<std::uint32_t>(it - sorted.begin());
}

void check_boundary_squares(const ChainComplex& cc) {
  for (std::size_t q = 2; q < cc.boundary.size(); ++q) {
    for (const auto& col : cc.boundary[q]) {
      std::vector<std::uint32_t> acc;
      for (std::uint32_t face : col) {
        const auto& sub = cc.boundary[q - 1][face];
        std::vector<std::uint32_t> merged;
        std::set_symmetric_difference(acc.begin(), acc.end(), sub.begin(), sub.end(),
                                      std::back_inserter(merged));
        acc = std::move(merged);
      }
      if (!acc.empty()) throw std::logic_error("boundary of boundary is nonzero");
    }
  }
}

}  // namespace

ChainComplex build_complex(const Bitset& top_cells, const std::vector<std::size_t>& dims) {
  const std::size_t d = dims.size();
  if (d < 2 || d > 3) throw input_error("grid dimension unsupported (2 or 3 axes)");
  std::size_t expect = 1;
  for (std::size_t e : dims) expect *= e;
  if (top_cells.size() != expect)
    throw input_error("cell set size " + std::to_string(top_cells.size()) +
                      " does not match grid with " + std::to_string(expect) + " cells");

  ChainComplex cc;
  cc.ambient_dim = d;
  cc.cells.assign(d + 1, {});

  const unsigned full = (1u << d) - 1;
  std::vector<std::size_t> corner(d);
  top_cells.for_each_set([&](std::size_t idx) {
    const auto base = cell_coords(idx, dims);
    // every face: per axis either span it or pin to one of the two walls
    for (unsigned extent = 0; extent <= full; ++extent) {
      // offsets of pinned axes run over all 0/1 choices
      unsigned off = 0;
      do {
        for (std::size_t a = 0; a < d; ++a)
          corner[a] = base[a] + (((off >> a) & 1u) ? 1 : 0);
        cc.cells[static_cast<std::size_t>(std::popcount(extent))].push_back(
            make_key(corner, extent, dims));
        // next offset supported on the pinned axes
        off = ((off | extent) + 1) & ~extent & ((1u << d) - 1);
      } while (off != 0);
    }
  });

  for (auto& level : cc.cells) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }

  cc.boundary.assign(d + 1, {});
  for (std::size_t q = 1; q <= d; ++q) {
    cc.boundary[q].reserve(cc.cells[q].size());
    for (CellKey key : cc.cells[q]) {
      const unsigned extent = static_cast<unsigned>(key & full);
      CellKey v = key >> d;
      std::vector<std::size_t> base(d);
      for (std::size_t a = d; a-- > 0;) {
        base[a] = static_cast<std::size_t>(v % (dims[a] + 1));
        v /= dims[a] + 1;
      }
      std::vector<std::uint32_t> col;
      for (std::size_t a = 0; a < d; ++a) {
        if (!((extent >> a) & 1u)) continue;
        const unsigned sub_extent = extent & ~(1u << a);
        col.push_back(key_position(cc.cells[q - 1], make_key(base, sub_extent, dims)));
        auto shifted = base;
        ++shifted[a];
        col.push_back(key_position(cc.cells[q - 1], make_key(shifted, sub_extent, dims)));
      }
      std::sort(col.begin(), col.end());
      cc.boundary[q].push_back(std::move(col));
    }
  }

  check_boundary_squares(cc);
  return cc;
}

namespace {

unsigned rank_sparse(std::vector<std::vector<std::uint32_t>> columns, std::size_t row_count) {
  // persistence-style column reduction: repeatedly cancel a column's largest
  // row against the column that already owns that row
  std::vector<std::int64_t> owner(row_count, -1);
  unsigned rank = 0;
  for (auto& col : columns) {
    while (!col.empty()) {
      const std::uint32_t low = col.back();
      if (owner[low] < 0) break;
      const auto& other = columns[static_cast<std::size_t>(owner[low])];
      std::vector<std::uint32_t> merged;
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(merged));
      col = std::move(merged);
    }
    if (!col.empty()) {
      owner[col.back()] = static_cast<std::int64_t>(&col - columns.data());
      ++rank;
    }
  }
  return rank;
}

unsigned rank_dense(const std::vector<std::vector<std::uint32_t>>& columns,
                    std::size_t row_count) {
  // rank is transpose-invariant; rows of the dense matrix are the columns
  Gf2Matrix m(columns.size(), row_count);
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::uint32_t r : columns[j]) m.set(j, r);
  return gf2_rank(std::move(m));
}

unsigned boundary_rank(const ChainComplex& cc, std::size_t q, BettiOptions opts) {
  if (q == 0 || q >= cc.boundary.size() || cc.boundary[q].empty()) return 0;
  const std::size_t rows = cc.cells[q - 1].size();
  const std::size_t cols = cc.boundary[q].size();
  switch (opts.strategy) {
    case RankStrategy::dense:
      return rank_dense(cc.boundary[q], rows);
    case RankStrategy::sparse:
      return rank_sparse(cc.boundary[q], rows);
    case RankStrategy::automatic:
      break;
  }
  // small boundary matrices pack well; large grids want the sparse path
  return rows * cols <= (std::size_t{1} << 22) ? rank_dense(cc.boundary[q], rows)
                                               : rank_sparse(cc.boundary[q], rows);
}

std::vector<unsigned> betti_from_complex(const ChainComplex& cc, std::size_t h,
                                         BettiOptions opts) {
  std::vector<unsigned> beta(h + 1, 0);
  std::vector<unsigned> rank(h + 2, 0);
  for (std::size_t q = 1; q <= h + 1; ++q)
    rank[q] = boundary_rank(cc, q, opts);
  for (std::size_t q = 0; q <= h; ++q) {
    const std::size_t n_q = cc.count(q);
    beta[q] = static_cast<unsigned>(n_q - rank[q] - rank[q + 1]);
  }
  return beta;
}

}  // namespace

std::vector<unsigned> betti_unreduced(const Bitset& cells, const std::vector<std::size_t>& dims,
                                      std::size_t h, BettiOptions opts) {
  if (h > dims.size()) throw input_error("homology degree exceeds the grid dimension");
  if (cells.none()) return std::vector<unsigned>(h + 1, 0);
  return betti_from_complex(build_complex(cells, dims), h, opts);
}

BettiVector betti_of_cells(const Bitset& cells, const std::vector<std::size_t>& dims,
                           std::size_t h, BettiOptions opts) {
  BettiVector out;
  if (h > dims.size()) throw input_error("homology degree exceeds the grid dimension");
  if (cells.none()) {
    out.reduced.assign(h + 1, 0);
    out.empty_intersection = true;
    return out;
  }
  out.reduced = betti_from_complex(build_complex(cells, dims), h, opts);
  out.reduced[0] -= 1;  // nonempty complex: drop the base component
  return out;
}

BettiVector betti(const CubicalSetSystem& sys, MemberMask subfamily, std::size_t h,
                  BettiOptions opts) {
  sys.validate();
  Bitset inter = Bitset::full(sys.cell_count());
  MemberMask m = subfamily;
  while (m) {
    const std::size_t i = static_cast<std::size_t>(std::countr_zero(m));
    if (i >= sys.size()) throw input_error("subfamily mask out of range");
    inter &= sys.sets[i];
    m &= m - 1;
  }
  return betti_of_cells(inter, sys.dims, h, opts);
}

std::vector<unsigned> shatter_profile_per_degree(const CubicalSetSystem& sys, std::size_t h,
                                                 std::size_t t, BettiOptions opts) {
  sys.validate();
  if (sys.size() > 64) throw size_error("shatter sweep supports at most 64 members");
  std::vector<unsigned> best(h + 1, 0);
  const std::size_t n = sys.size();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  // size 0 is the whole grid (intersection over nothing)
  for (std::size_t s = 0; s <= std::min(t, n); ++s) {
    for_each_subfamily_of_size(all, s, [&](MemberMask mask) {
      const BettiVector bv = betti(sys, mask, h, opts);
      for (std::size_t i = 0; i <= h; ++i) best[i] = std::max(best[i], bv.reduced[i]);
      return true;
    });
  }
  return best;
}

unsigned shatter_value(const CubicalSetSystem& sys, std::size_t h, std::size_t t,
                       BettiOptions opts) {
  unsigned v = 0;
  for (unsigned b : shatter_profile_per_degree(sys, h, t, opts)) v = std::max(v, b);
  return v;
}

}  // namespace convexlab
