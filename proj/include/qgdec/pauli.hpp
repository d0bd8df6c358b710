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
#include <string>
#include <string_view>

#include "qgdec/bitvec.hpp"

namespace qgdec {

/// Phase-free Pauli operator in binary symplectic form.
///
/// Qubit i carries I, X, Z, Y for (x_i, z_i) = (0,0), (1,0), (0,1), (1,1).
/// Products drop the overall phase.
struct PauliOperator {
  BitVec x;
  BitVec z;

  PauliOperator() = default;
  explicit PauliOperator(std::size_t num_qubits) : x(num_qubits), z(num_qubits) {}
  PauliOperator(BitVec x_part, BitVec z_part);

  /// Dense form over {I,X,Y,Z}, e.g. "XZZXI". Also accepts '_' for identity.
  static PauliOperator parse(std::string_view text);
  /// Sparse 1-based form, e.g. "X1 Z2 Y7", on `num_qubits` qubits. "I" or "" is the identity.
  static PauliOperator parse_sparse(std::size_t num_qubits, std::string_view text);
  static PauliOperator single(std::size_t num_qubits, std::size_t qubit, char pauli);

  std::size_t size() const { return x.size(); }
  /// Number of qubits acted on non-trivially.
  std::size_t weight() const { return BitVec::union_count(x, z); }
  bool is_identity() const { return x.none() && z.none(); }
  bool is_x_type() const { return z.none(); }
  bool is_z_type() const { return x.none(); }

  char at(std::size_t qubit) const;
  void set(std::size_t qubit, char pauli);

  PauliOperator& operator*=(const PauliOperator& other);
  friend PauliOperator operator*(PauliOperator a, const PauliOperator& b) { return a *= b; }
  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

  std::string str() const;
  /// Stacked (x ‖ z) row used for span computations.
  BitVec symplectic_row() const { return BitVec::concat(x, z); }
};

/// True iff the two operators anticommute: parity of x_P·z_Q + z_P·x_Q.
bool symplectic_product(const PauliOperator& p, const PauliOperator& q);

inline bool commutes(const PauliOperator& p, const PauliOperator& q) { return !symplectic_product(p, q); }

}  // namespace qgdec
