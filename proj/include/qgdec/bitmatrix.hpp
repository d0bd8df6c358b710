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

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgdec/bitvec.hpp"

namespace qgdec {

/// Dense GF(2) matrix stored as packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  static BitMatrix identity(std::size_t n);
  /// Each string is one row of '0'/'1'; all rows must have equal length.
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
  static BitMatrix from_strings(std::span<const std::string> rows);
  static BitMatrix from_rows(std::vector<BitVec> rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }
  BitVec column(std::size_t c) const;

  BitMatrix transpose() const;
  /// Rows `row_ids` and columns `col_ids`, in the given order.
  BitMatrix select(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const;
  bool is_identity() const;
  bool is_symmetric() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
  BitMatrix& operator+=(const BitMatrix& other);
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }

  /// Rows as '0'/'1' strings joined by newlines.
  std::string str() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

/// GF(2) product. Throws DimensionError when inner dimensions differ.
BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);

/// Row vector times matrix: XOR of the rows of `m` selected by `v`.
BitVec vecmul(const BitVec& v, const BitMatrix& m);

/// Matrix times column vector: bit i is row(i)·v.
BitVec matvec(const BitMatrix& m, const BitVec& v);

/// Row-space dimension via Gaussian elimination.
std::size_t rank(const BitMatrix& m);

/// Gauss–Jordan inverse. Pivots are chosen as the lowest row index at each step.
/// Throws SingularError when the matrix is not invertible.
BitMatrix invert(const BitMatrix& m);

/// Incrementally built reduced basis of a GF(2) row space, with membership queries.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t dimension() const { return basis_.size(); }

  /// Adds `v` to the spanning set; returns false if it was already in the span.
  bool insert(const BitVec& v);
  bool contains(const BitVec& v) const;
  /// Remainder of `v` after eliminating against the basis; zero iff contained.
  BitVec reduce(BitVec v) const;

 private:
  std::size_t width_;
  std::vector<BitVec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace qgdec
