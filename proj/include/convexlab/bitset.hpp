#pragma once

// Fixed-size bitset over a ground set {0, ..., size-1}, packed into 64-bit
// words. Bits past size stay zero so word-level kernels need no tail masks.

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "convexlab/error.hpp"
#include "convexlab/kernels.hpp"

namespace convexlab {

class Bitset {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bitset full(std::size_t size) {
    Bitset b(size);
    for (auto& w : b.words_) w = ~kern::word{0};
    b.mask_tail();
    return b;
  }

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  kern::word* data() { return words_.data(); }
  const kern::word* data() const { return words_.data(); }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i / 64] >> (i % 64)) & 1u;
  }

  void set(std::size_t i) {
    assert(i < size_);
    words_[i / 64] |= kern::word{1} << (i % 64);
  }

  void reset(std::size_t i) {
    assert(i < size_);
    words_[i / 64] &= ~(kern::word{1} << (i % 64));
  }

  bool any() const { return kern::ops().any(data(), word_count()); }
  bool none() const { return !any(); }
  std::size_t count() const { return kern::ops().popcount(data(), word_count()); }

  bool intersects(const Bitset& o) const {
    assert(size_ == o.size_);
    return kern::ops().any_and(data(), o.data(), word_count());
  }

  bool is_subset_of(const Bitset& o) const {
    assert(size_ == o.size_);
    return kern::ops().subset(data(), o.data(), word_count());
  }

  Bitset& operator&=(const Bitset& o) {
    assert(size_ == o.size_);
    kern::ops().and_assign(data(), o.data(), word_count());
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(size_ == o.size_);
    kern::ops().or_assign(data(), o.data(), word_count());
    return *this;
  }

  Bitset& operator^=(const Bitset& o) {
    assert(size_ == o.size_);
    kern::ops().xor_assign(data(), o.data(), word_count());
    return *this;
  }

  // this := this \ o
  Bitset& subtract(const Bitset& o) {
    assert(size_ == o.size_);
    kern::ops().andnot_assign(data(), o.data(), word_count());
    return *this;
  }

  friend Bitset operator&(const Bitset& a, const Bitset& b) {
    assert(a.size_ == b.size_);
    Bitset r(a.size_);
    kern::ops().and_into(r.data(), a.data(), b.data(), r.word_count());
    return r;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) {
    a |= b;
    return a;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && kern::ops().equal(a.data(), b.data(), a.word_count());
  }

  std::size_t find_first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return npos;
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      kern::word bits = words_[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  // Positional encoding: character j of the string is element j, '1' = member.
  std::string to_bitstring() const {
    std::string s(size_, '0');
    for_each_set([&](std::size_t i) { s[i] = '1'; });
    return s;
  }

  static Bitset from_bitstring(std::string_view s) {
    Bitset b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        b.set(i);
      else if (s[i] != '0')
        throw input_error("bad bitstring character '" + std::string(1, s[i]) + "'");
    }
    return b;
  }

 private:
  void mask_tail() {
    if (std::size_t rem = size_ % 64; rem != 0 && !words_.empty())
      words_.back() &= (kern::word{1} << rem) - 1;
  }

  std::size_t size_ = 0;
  std::vector<kern::word> words_;
};

}  // namespace convexlab
