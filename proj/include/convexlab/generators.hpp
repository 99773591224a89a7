#pragma once

// Constructors for the three structured families (graded-Helly sequence
// realizations, binary-word families with a minimally non-partitionable
// point set, ring-in-box shatter families) plus random test families. Each
// structured generator ships a certificate checker that recomputes the
// predicted parameters through the ordinary analysis paths.

#include <cstdint>
#include <string>
#include <vector>

#include "convexlab/cubical.hpp"
#include "convexlab/set_system.hpp"

namespace convexlab {

struct HellyFamily {
  SetSystem system;
  std::vector<std::string> names;
  std::vector<unsigned> u;  // the target graded-Helly profile
};

// family {F_k^(i) = {1..u_i} minus {k}} on ground {1..max u}; the graded
// Helly profile of the output equals u, which certify() rechecks
HellyFamily gen_helly_sequence(const std::vector<unsigned>& u);

struct BinaryWordFamily {
  SetSystem system;  // ground: all words of word_length bits, index = word value
  std::vector<std::string> names;
  PointSet s;                        // distinguished points, one per block element
  std::vector<std::string> s_words;  // the same points spelled as words
  std::size_t k = 0;
  std::size_t word_length = 0;
};

// words of length 2^(k-1)-1 with one member per (letter, value) pair; s lists
// the k words built from the two-block partitions of {1..k}, letter 0 marking
// the block that contains element 1
BinaryWordFamily gen_binary_words(std::size_t k);

struct GenShatterOptions {
  std::size_t max_arcs = 8;  // side-3 rings have 8 perimeter cells
  unsigned max_rings = 6;    // per box
};

struct ShatterFamily {
  CubicalSetSystem system;  // two axes: x across the boxes, y of height 5
  std::vector<std::string> names;
  std::vector<unsigned> f;
  std::vector<std::size_t> box_x0;     // per box left column
  std::vector<std::size_t> box_width;

  // members are grouped by box: for box i (1-indexed) the sets F_1..F_i
  std::size_t member_index(std::size_t i, std::size_t k) const {
    return (i - 1) * i / 2 + (k - 1);
  }
  MemberMask box_members(std::size_t i) const;
  Bitset box_cells(std::size_t i) const;
};

// box i holds f(i) disjoint thickness-1 rings whose perimeters split into i
// arcs; member F_k^(i) is the box minus every arc labeled k, so only the full
// per-box intersection seals the rings and frees their centers
ShatterFamily gen_shatter_family(const std::vector<unsigned>& f, GenShatterOptions opts = {});

struct RandomFlatFamily {
  SetSystem system;
  std::vector<std::string> names;
};

struct RandomCubicalFamily {
  CubicalSetSystem system;
  std::vector<std::string> names;
};

RandomFlatFamily gen_random_abstract(std::size_t ground, std::size_t members, double density,
                                     std::uint64_t seed);
RandomFlatFamily gen_random_intervals(std::size_t cells, std::size_t members, std::uint64_t seed);
RandomCubicalFamily gen_random_boxes(const std::vector<std::size_t>& dims, std::size_t members,
                                     std::uint64_t seed);

struct CertificateReport {
  bool ok = true;
  std::vector<std::string> lines;
};

CertificateReport certify(const HellyFamily& fam);
CertificateReport certify(const BinaryWordFamily& fam);
// sweep_budget caps the subfamily count of the full shatter-profile check;
// beyond it only the per-box certificates run
CertificateReport certify(const ShatterFamily& fam, std::size_t sweep_budget = 50000);

}  // namespace convexlab
