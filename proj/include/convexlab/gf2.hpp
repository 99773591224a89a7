#pragma once

// Dense GF(2) matrices with bit-packed rows and Gaussian-elimination rank.

#include <vector>

#include "convexlab/bitset.hpp"

namespace convexlab {

struct Gf2Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Bitset> row_bits;

  Gf2Matrix() = default;
  Gf2Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), row_bits(r, Bitset(c)) {}

  void set(std::size_t r, std::size_t c) { row_bits[r].set(c); }
  bool test(std::size_t r, std::size_t c) const { return row_bits[r].test(c); }
};

unsigned gf2_rank(Gf2Matrix m);

}  // namespace convexlab
