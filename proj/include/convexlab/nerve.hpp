#pragma once

// Nerve of a finite set family: one vertex per member, a face per subfamily
// with nonempty intersection, truncated at a dimension cap.

#include <cstddef>
#include <vector>

#include "convexlab/cubical.hpp"
#include "convexlab/set_system.hpp"

namespace convexlab {

struct NerveComplex {
  std::size_t vertex_count = 0;
  std::size_t dim_cap = 0;
  // faces[k] holds the k-dimensional faces as member masks of k+1 bits,
  // sorted ascending; faces[0] are the vertices with nonempty sets
  std::vector<std::vector<MemberMask>> faces;

  std::size_t face_count(std::size_t k) const {
    return k < faces.size() ? faces[k].size() : 0;
  }
};

NerveComplex nerve(const SetSystem& sys, std::size_t dim_cap);
NerveComplex nerve(const CubicalSetSystem& sys, std::size_t dim_cap);

}  // namespace convexlab
