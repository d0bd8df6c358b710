// Copyright 2026 The qgdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qgdec {

/// Fixed-length bit string packed into 64-bit words.
///
/// Bits past `size()` are kept zero after every mutation, so word-wise equality,
/// hashing and popcount never need a tail mask.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  /// Parses a string of '0'/'1' characters; character i becomes bit i.
  static BitVec from_string(std::string_view bits);
  static BitVec unit(std::size_t size, std::size_t index);
  /// Low `size` bits of `value`, most significant first: bit 0 = (value >> (size-1)) & 1.
  static BitVec from_uint(std::size_t size, std::uint64_t value);

  static constexpr std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::span<const Word> words() const { return words_; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void clear();

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  BitVec& operator|=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  /// Hamming weight.
  std::size_t popcount() const;
  bool any() const;
  bool none() const { return !any(); }
  /// Parity of the bitwise AND, i.e. the GF(2) inner product.
  bool dot(const BitVec& other) const;
  /// Popcount of (a | b) without materializing the union.
  static std::size_t union_count(const BitVec& a, const BitVec& b);

  /// Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const;
  std::vector<std::size_t> ones() const;

  /// Inverse of from_uint. Requires size() <= 64.
  std::uint64_t to_uint() const;
  /// '0'/'1' characters, bit 0 first.
  std::string str() const;

  /// Concatenation a‖b.
  static BitVec concat(const BitVec& a, const BitVec& b);

 private:
  void check_same_size(const BitVec& other) const;

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace qgdec

template <>
struct std::hash<qgdec::BitVec> {
  std::size_t operator()(const qgdec::BitVec& v) const noexcept {
    std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
    for (auto w : v.words()) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
