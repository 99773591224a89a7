#pragma once

// Cubical set systems on a d-dimensional grid of unit cells (d = 2 or 3) and
// Z2 homology of closed unions of cells. Members are sets of top cells; the
// complex of a selection is the closure (all faces of every selected cell).
//
// Cells are keyed by corner vertex and spanned-axis mask. Sorting by key
// orders cells by corner coordinates first, which keeps the sparse boundary
// reduction nearly fill-in free on grid complexes.

#include <cstdint>
#include <vector>

#include "convexlab/bitset.hpp"
#include "convexlab/set_system.hpp"

namespace convexlab {

struct CubicalSetSystem {
  std::vector<std::size_t> dims;  // grid extents in cells, 2 or 3 axes
  std::vector<Bitset> sets;       // top-cell membership, row-major, last axis fastest

  std::size_t dim() const { return dims.size(); }
  std::size_t cell_count() const;
  std::size_t size() const { return sets.size(); }
  void validate() const;  // throws input_error on bad dims or set sizes

  // overlay on the membership ground set, for set-core analyses
  SetSystem as_set_system() const;
};

std::size_t cell_index(const std::vector<std::size_t>& coords, const std::vector<std::size_t>& dims);
std::vector<std::size_t> cell_coords(std::size_t index, const std::vector<std::size_t>& dims);

using CellKey = std::uint64_t;

struct ChainComplex {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<CellKey>> cells;  // per dimension q, sorted keys
  // boundary[q] holds one sorted column of (q-1)-cell row indices per q-cell
  std::vector<std::vector<std::vector<std::uint32_t>>> boundary;

  std::size_t count(std::size_t q) const {
    return q < cells.size() ? cells[q].size() : 0;
  }
};

// closure complex of the selected top cells; verifies boundary-of-boundary
// vanishes
ChainComplex build_complex(const Bitset& top_cells, const std::vector<std::size_t>& dims);

enum class RankStrategy { automatic, dense, sparse };

struct BettiOptions {
  RankStrategy strategy = RankStrategy::automatic;
};

struct BettiVector {
  std::vector<unsigned> reduced;  // reduced Betti numbers, degrees 0..h
  bool empty_intersection = false;
};

// reduced Betti numbers of the closure complex of the intersection of the
// selected members (empty mask selects the full grid)
BettiVector betti(const CubicalSetSystem& sys, MemberMask subfamily, std::size_t h,
                  BettiOptions opts = {});
BettiVector betti_of_cells(const Bitset& cells, const std::vector<std::size_t>& dims,
                           std::size_t h, BettiOptions opts = {});

// unreduced Betti numbers beta_0..beta_h of a cell selection
std::vector<unsigned> betti_unreduced(const Bitset& cells, const std::vector<std::size_t>& dims,
                                      std::size_t h, BettiOptions opts = {});

// max over subfamilies of size <= t of max_{i<=h} reduced Betti i of the
// intersection; the empty subfamily contributes the (contractible) full grid
unsigned shatter_value(const CubicalSetSystem& sys, std::size_t h, std::size_t t,
                       BettiOptions opts = {});
// same sweep, split by homology degree (index i = degree i)
std::vector<unsigned> shatter_profile_per_degree(const CubicalSetSystem& sys, std::size_t h,
                                                 std::size_t t, BettiOptions opts = {});

}  // namespace convexlab
