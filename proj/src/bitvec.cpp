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

#include "qgdec/bitvec.hpp"

#include "qgdec/errors.hpp"

namespace qgdec {

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ParseError("invalid bit character '" + std::string(1, bits[i]) + "' at position " + std::to_string(i));
    }
  }
  return v;
}

BitVec BitVec::unit(std::size_t size, std::size_t index) {
  BitVec v(size);
  v.set(index);
  return v;
}

BitVec BitVec::from_uint(std::size_t size, std::uint64_t value) {
  if (size > kWordBits) {
    throw DimensionError("from_uint supports at most 64 bits");
  }
  BitVec v(size);
  for (std::size_t i = 0; i < size; ++i) {
    if ((value >> (size - 1 - i)) & 1u) {
      v.set(i);
    }
  }
  return v;
}

void BitVec::clear() {
  for (auto& w : words_) {
    w = 0;
  }
}

void BitVec::check_same_size(const BitVec& other) const {
  if (size_ != other.size_) {
    throw DimensionError("bit vector length mismatch: " + std::to_string(size_) + " vs " +
                         std::to_string(other.size_));
  }
}

BitVec& BitVec::operator^=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= other.words_[i];
  }
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] |= other.words_[i];
  }
  return *this;
}

std::size_t BitVec::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) {
    n += static_cast<std::size_t>(std::popcount(w));
  }
  return n;
}

bool BitVec::any() const {
  for (auto w : words_) {
    if (w) {
      return true;
    }
  }
  return false;
}

bool BitVec::dot(const BitVec& other) const {
  check_same_size(other);
  Word acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    acc ^= words_[i] & other.words_[i];
  }
  return std::popcount(acc) & 1;
}

std::size_t BitVec::union_count(const BitVec& a, const BitVec& b) {
  a.check_same_size(b);
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(a.words_[i] | b.words_[i]));
  }
  return n;
}

std::size_t BitVec::find_next(std::size_t from) const {
  if (from >= size_) {
    return size_;
  }
  std::size_t wi = from / kWordBits;
  Word w = words_[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w) {
      return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    }
    if (++wi == words_.size()) {
      return size_;
    }
    w = words_[wi];
  }
}

std::vector<std::size_t> BitVec::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = find_next(0); i < size_; i = find_next(i + 1)) {
    out.push_back(i);
  }
  return out;
}

std::uint64_t BitVec::to_uint() const {
  if (size_ > kWordBits) {
    throw DimensionError("to_uint supports at most 64 bits");
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    value = (value << 1) | static_cast<std::uint64_t>(get(i));
  }
  return value;
}

std::string BitVec::str() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

BitVec BitVec::concat(const BitVec& a, const BitVec& b) {
  BitVec out(a.size() + b.size());
  for (auto i : a.ones()) {
    out.set(i);
  }
  for (auto i : b.ones()) {
    out.set(a.size() + i);
  }
  return out;
}

}  // namespace qgdec
