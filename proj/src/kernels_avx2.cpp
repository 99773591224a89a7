#include "convexlab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

namespace convexlab::kern {

namespace {

#define CL_AVX2 __attribute__((target("avx2")))

CL_AVX2 void v_and_into(word* dst, const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

CL_AVX2 void v_and_assign(word* dst, const word* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(vd, va));
  }
  for (; i < n; ++i) dst[i] &= a[i];
}

CL_AVX2 void v_or_assign(word* dst, const word* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(vd, va));
  }
  for (; i < n; ++i) dst[i] |= a[i];
}

CL_AVX2 void v_xor_assign(word* dst, const word* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(vd, va));
  }
  for (; i < n; ++i) dst[i] ^= a[i];
}

CL_AVX2 void v_andnot_assign(word* dst, const word* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    // andnot computes ~first & second
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(va, vd));
  }
  for (; i < n; ++i) dst[i] &= ~a[i];
}

CL_AVX2 bool v_any_and(const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_or_si256(acc, _mm256_and_si256(va, vb));
  }
  if (!_mm256_testz_si256(acc, acc)) return true;
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

CL_AVX2 bool v_subset(const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_or_si256(acc, _mm256_andnot_si256(vb, va));
  }
  if (!_mm256_testz_si256(acc, acc)) return false;
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

CL_AVX2 bool v_equal(const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_or_si256(acc, _mm256_xor_si256(va, vb));
  }
  if (!_mm256_testz_si256(acc, acc)) return false;
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

CL_AVX2 bool v_any(const word* a, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
  }
  if (!_mm256_testz_si256(acc, acc)) return true;
  for (; i < n; ++i)
    if (a[i]) return true;
  return false;
}

// Vector loads feed four hardware popcnts per iteration; AVX2 itself has no
// 64-bit lane popcount, and this is memory-bound anyway.
CL_AVX2 std::size_t v_popcount(const word* a, std::size_t n) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    total += static_cast<std::size_t>(std::popcount(a[i]) + std::popcount(a[i + 1]) +
                                      std::popcount(a[i + 2]) + std::popcount(a[i + 3]));
  }
  for (; i < n; ++i) total += std::popcount(a[i]);
  return total;
}

#undef CL_AVX2

}  // namespace

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

const BitOps& avx2_ops() {
  static const BitOps table = {
      v_and_into, v_and_assign, v_or_assign, v_xor_assign, v_andnot_assign,
      v_any_and,  v_subset,     v_equal,     v_any,        v_popcount,
  };
  return table;
}

}  // namespace convexlab::kern

#else

namespace convexlab::kern {

bool avx2_supported() { return false; }

const BitOps& avx2_ops() { return scalar_ops(); }

}  // namespace convexlab::kern

#endif
