#pragma once

// Word-level kernels for bit-packed set arithmetic.
//
// Everything above this layer (set intersections, GF(2) row elimination,
// depth counts) reduces to streaming AND/OR/XOR/popcount over arrays of
// 64-bit words. A scalar reference implementation always exists; an AVX2
// variant is compiled on x86-64 and selected at runtime when the CPU
// supports it. The two backends are equivalence-tested against each other.
//
// Selection order: set_backend() > CONVEXLAB_KERNEL env var ("scalar" or
// "avx2") > CPU autodetection.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace convexlab::kern {

using word = std::uint64_t;

struct BitOps {
  void (*and_into)(word* dst, const word* a, const word* b, std::size_t n);
  void (*and_assign)(word* dst, const word* a, std::size_t n);
  void (*or_assign)(word* dst, const word* a, std::size_t n);
  void (*xor_assign)(word* dst, const word* a, std::size_t n);
  void (*andnot_assign)(word* dst, const word* a, std::size_t n);  // dst &= ~a
  bool (*any_and)(const word* a, const word* b, std::size_t n);    // (a & b) != 0
  bool (*subset)(const word* a, const word* b, std::size_t n);     // (a & ~b) == 0
  bool (*equal)(const word* a, const word* b, std::size_t n);
  bool (*any)(const word* a, std::size_t n);
  std::size_t (*popcount)(const word* a, std::size_t n);
};

enum class Backend { scalar, avx2 };

const BitOps& scalar_ops();
bool avx2_supported();
const BitOps& avx2_ops();  // only valid when avx2_supported()

const BitOps& ops();
void set_backend(Backend b);
std::string_view backend_name();

}  // namespace convexlab::kern
