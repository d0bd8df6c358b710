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

#include "qgdec/bitmatrix.hpp"

#include <utility>

#include "qgdec/errors.hpp"

namespace qgdec {

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i);
  }
  return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<std::string> copy(rows.begin(), rows.end());
  return from_strings(copy);
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows) {
  std::vector<BitVec> parsed;
  parsed.reserve(rows.size());
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw DimensionError("ragged matrix rows");
    }
    parsed.push_back(BitVec::from_string(r));
  }
  return from_rows(std::move(parsed), cols);
}

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw DimensionError("row length does not match column count");
    }
  }
  BitMatrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

BitVec BitMatrix::column(std::size_t c) const {
  BitVec v(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    v.set(r, get(r, c));
  }
  return v;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (auto c : rows_[r].ones()) {
      t.set(c, r);
    }
  }
  return t;
}

BitMatrix BitMatrix::select(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
  BitMatrix out(row_ids.size(), col_ids.size());
  for (std::size_t i = 0; i < row_ids.size(); ++i) {
    for (std::size_t j = 0; j < col_ids.size(); ++j) {
      out.set(i, j, get(row_ids[i], col_ids[j]));
    }
  }
  return out;
}

bool BitMatrix::is_identity() const {
  return rows() == cols_ && *this == identity(cols_);
}

bool BitMatrix::is_symmetric() const {
  return rows() == cols_ && *this == transpose();
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
  if (rows() != other.rows() || cols_ != other.cols_) {
    throw DimensionError("matrix sum shape mismatch");
  }
  for (std::size_t r = 0; r < rows(); ++r) {
    rows_[r] ^= other.rows_[r];
  }
  return *this;
}

std::string BitMatrix::str() const {
  std::string s;
  for (std::size_t r = 0; r < rows(); ++r) {
    if (r) {
      s += '\n';
    }
    s += rows_[r].str();
  }
  return s;
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul inner dimension mismatch: " + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()));
  }
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out.row(r) = vecmul(a.row(r), b);
  }
  return out;
}

BitVec vecmul(const BitVec& v, const BitMatrix& m) {
  if (v.size() != m.rows()) {
    throw DimensionError("vector length does not match matrix rows");
  }
  BitVec out(m.cols());
  for (std::size_t i = v.find_next(0); i < v.size(); i = v.find_next(i + 1)) {
    out ^= m.row(i);
  }
  return out;
}

BitVec matvec(const BitMatrix& m, const BitVec& v) {
  if (v.size() != m.cols()) {
    throw DimensionError("vector length does not match matrix columns");
  }
  BitVec out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out.set(r, m.row(r).dot(v));
  }
  return out;
}

std::size_t rank(const BitMatrix& m) {
  std::vector<BitVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(m.row(r));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(c)) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r].get(c)) {
        rows[r] ^= rows[rank];
      }
    }
    ++rank;
  }
  return rank;
}

BitMatrix invert(const BitMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) {
    throw DimensionError("invert requires a square matrix");
  }
  BitMatrix work = m;
  BitMatrix inv = BitMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && !work.get(pivot, c)) {
      ++pivot;
    }
    if (pivot == n) {
      throw SingularError("matrix is singular (no pivot in column " + std::to_string(c) + ")");
    }
    std::swap(work.row(c), work.row(pivot));
    std::swap(inv.row(c), inv.row(pivot));
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && work.get(r, c)) {
        work.row(r) ^= work.row(c);
        inv.row(r) ^= inv.row(c);
      }
    }
  }
  return inv;
}

bool RowSpace::insert(const BitVec& v) {
  BitVec rem = reduce(v);
  const std::size_t pivot = rem.find_next(0);
  if (pivot == rem.size()) {
    return false;
  }
  // Keep the basis fully reduced so reduce() is a single pass.
  for (auto& b : basis_) {
    if (b.get(pivot)) {
      b ^= rem;
    }
  }
  basis_.push_back(std::move(rem));
  pivots_.push_back(pivot);
  return true;
}

BitVec RowSpace::reduce(BitVec v) const {
  if (v.size() != width_) {
    throw DimensionError("row space width mismatch");
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v.get(pivots_[i])) {
      v ^= basis_[i];
    }
  }
  return v;
}

bool RowSpace::contains(const BitVec& v) const {
  return reduce(v).none();
}

}  // namespace qgdec
