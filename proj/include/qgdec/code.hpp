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
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qgdec/pauli.hpp"

namespace qgdec {

/// An [[N,k,d]] stabilizer code together with a choice of logical operators.
///
/// The generator order used everywhere downstream is stabilizers S_1..S_{N-k}
/// followed by the logical-Z operators, matching the order of the total syndrome.
struct StabilizerCode {
  std::string name;
  std::size_t n = 0;
  std::size_t k = 0;
  /// Claimed distance; stored as metadata and never re-derived by validate().
  std::size_t d = 0;
  std::vector<PauliOperator> stabilizers;
  std::vector<PauliOperator> logical_z;
  std::vector<PauliOperator> logical_x;

  /// Every stabilizer is purely X-type or purely Z-type.
  bool css() const;
  /// Correction radius (d-1)/2.
  std::size_t t() const { return d == 0 ? 0 : (d - 1) / 2; }
  /// Stabilizers followed by logical-Z operators.
  std::vector<PauliOperator> generators() const;
};

/// Checks shape, commutation, logical pairing and independence. Throws the first violation
/// as CommutationError, LogicalPairingError, DependenceError or ValidationError.
void validate(const StabilizerCode& code);

/// Parses the text code format:
///
///     N k d
///     S  <pauli>     (N-k lines)
///     LZ <pauli>     (k lines)
///     LX <pauli>     (k lines)
///
/// '#' starts a comment. The parsed code is validated before it is returned.
StabilizerCode load_code(std::string_view text, std::string name = "custom");
StabilizerCode load_code_file(const std::filesystem::path& path);
std::string format_code(const StabilizerCode& code);

/// True iff `op` lies in the group generated by the stabilizers (phases ignored).
bool in_stabilizer_group(const StabilizerCode& code, const PauliOperator& op);

struct DistanceResult {
  /// Minimum logical weight when `exact`, otherwise a lower bound (w_max + 1).
  std::size_t weight = 0;
  bool exact = false;
  /// A minimum-weight logical operator when `exact`.
  PauliOperator witness;
};

/// Exhaustive minimum-weight search over Paulis of weight <= w_max that commute with every
/// stabilizer but lie outside the stabilizer group. Throws BudgetExceeded when
/// sum_{q<=w_max} C(N,q) 3^q exceeds `budget`.
DistanceResult verify_distance(const StabilizerCode& code, std::size_t w_max,
                               std::uint64_t budget = 500'000'000ULL);

/// sum_{q=0}^{w} C(n,q) * 3^q, saturating at UINT64_MAX.
std::uint64_t pauli_ball_size(std::size_t n, std::size_t w);

enum class CodeFamily { kColor, kSurface };

/// Triangular 6.6.6 color code [[(3d^2+1)/4,1,d]] or rotated surface code [[d^2,1,d]].
/// Throws std::invalid_argument unless d is odd and >= 3.
StabilizerCode build_family(CodeFamily family, std::size_t d);

/// Registry names that resolve without parameters, plus the family patterns.
std::vector<std::string> builtin_names();

/// Resolves `five_qubit`, `steane`, `noncss11/17/25/29`, `color:<d>`, `surface:<d>`.
/// Throws std::invalid_argument for unknown names.
StabilizerCode builtin_code(std::string_view name);

/// Built-in name, or otherwise a path to a code file.
StabilizerCode resolve_code(std::string_view name_or_path);

}  // namespace qgdec
