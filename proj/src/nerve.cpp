#include "convexlab/nerve.hpp"

#include <functional>

#include "convexlab/bitset.hpp"
#include "convexlab/error.hpp"
#include "convexlab/set_system.hpp"

namespace convexlab {

namespace {

NerveComplex nerve_of_sets(const std::vector<Bitset>& sets, std::size_t ground,
                           std::size_t dim_cap) {
  if (sets.size() > 64) throw size_error("nerve construction supports at most 64 members");
  NerveComplex out;
  out.vertex_count = sets.size();
  out.dim_cap = dim_cap;
  out.faces.assign(dim_cap + 1, {});

  // depth-first over members in increasing order; a face whose intersection
  // is already empty cannot extend, so whole subtrees prune away
  std::function<void(std::size_t, MemberMask, std::size_t, const Bitset&)> rec =
      [&](std::size_t start, MemberMask face, std::size_t size, const Bitset& inter) {
        if (size > 0) out.faces[size - 1].push_back(face);
        if (size == dim_cap + 1) return;
        for (std::size_t i = start; i < sets.size(); ++i) {
          Bitset next = inter & sets[i];
          if (next.any()) rec(i + 1, face | (MemberMask{1} << i), size + 1, next);
        }
      };
  rec(0, 0, 0, Bitset::full(ground));

  // increasing-member DFS emits masks in depth-first order, not numeric order
  for (auto& level : out.faces) std::sort(level.begin(), level.end());
  return out;
}

}  // namespace

NerveComplex nerve(const SetSystem& sys, std::size_t dim_cap) {
  return nerve_of_sets(sys.sets, sys.ground_size, dim_cap);
}

NerveComplex nerve(const CubicalSetSystem& sys, std::size_t dim_cap) {
  sys.validate();
  return nerve_of_sets(sys.sets, sys.cell_count(), dim_cap);
}

}  // namespace convexlab
