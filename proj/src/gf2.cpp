#include "convexlab/gf2.hpp"

#include <utility>

namespace convexlab {

unsigned gf2_rank(Gf2Matrix m) {
  unsigned rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && !m.row_bits[pivot].test(col)) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(m.row_bits[row], m.row_bits[pivot]);
    for (std::size_t r = row + 1; r < m.rows; ++r)
      if (m.row_bits[r].test(col)) m.row_bits[r] ^= m.row_bits[row];
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace convexlab
