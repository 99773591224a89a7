#include "convexlab/kernels.hpp"

#include <bit>

namespace convexlab::kern {

namespace {

void s_and_into(word* dst, const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void s_and_assign(word* dst, const word* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= a[i];
}

void s_or_assign(word* dst, const word* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= a[i];
}

void s_xor_assign(word* dst, const word* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= a[i];
}

void s_andnot_assign(word* dst, const word* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= ~a[i];
}

bool s_any_and(const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool s_subset(const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool s_equal(const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool s_any(const word* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i]) return true;
  return false;
}

std::size_t s_popcount(const word* a, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i]);
  return total;
}

}  // namespace

const BitOps& scalar_ops() {
  static const BitOps table = {
      s_and_into, s_and_assign, s_or_assign,  s_xor_assign, s_andnot_assign,
      s_any_and,  s_subset,     s_equal,      s_any,        s_popcount,
  };
  return table;
}

}  // namespace convexlab::kern
