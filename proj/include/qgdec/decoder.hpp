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
#include <optional>
#include <vector>

#include "qgdec/bitmatrix.hpp"
#include "qgdec/code.hpp"
#include "qgdec/graph.hpp"
#include "qgdec/pauli.hpp"

namespace qgdec {

struct DecodeConfig {
  /// Bound on |mu|; unset means t = (d-1)/2.
  std::optional<std::size_t> T;
  /// Restrict candidate nodes to FFN layers L_1..L_min(T, w[alpha]).
  bool prune = true;
  /// Occupied layers must form a contiguous prefix starting at L_1.
  bool structured = true;
  /// Only search the all-zero logical syndrome branch. Off by default: it is exact for
  /// Z-type errors on CSS codes but can miss the minimum for X-type errors.
  bool css_fastpath = false;
  /// T = N, i.e. the full (non-degenerate) minimum over every coset member.
  bool exhaustive_mld = false;
};

/// Effective bound for `code`. Throws std::invalid_argument when T > N.
std::size_t resolve_bound(const StabilizerCode& code, const DecodeConfig& cfg);

/// Feed-forward layering rooted at the graph syndrome: L_1 holds the syndrome nodes and
/// their neighbours, L_m the nodes at graph distance 2m-2 or 2m-1 from the syndrome.
struct FFN {
  std::vector<std::vector<std::size_t>> layers;
  /// 1-based layer of each node, 0 when unreachable from the syndrome.
  std::vector<std::size_t> layer_of;

  std::size_t depth() const { return layers.size(); }
};

FFN build_ffn(const BitMatrix& gamma, const BitVec& alpha);

/// Graph-frame member (mu, mu * Gamma + alpha) of the coset with syndrome alpha.
PauliOperator coset_member(const BitMatrix& gamma, const BitVec& alpha, const BitVec& mu);

struct CosetSearch {
  std::size_t T = 0;
  bool prune = true;
  bool structured = true;
  /// When set, mu may only use these nodes.
  const BitVec* allowed = nullptr;
};

struct CosetResult {
  BitVec mu;
  PauliOperator member;
  std::size_t weight = 0;
  /// The returned member is the (0, alpha) fallback and w[alpha] exceeds T.
  bool bounded = false;
  std::uint64_t explored = 0;
};

/// Minimum-weight member over |mu| <= T, enumerating supports by increasing size and
/// stopping once the size reaches the best weight found.
CosetResult coset_minimum(const BitMatrix& gamma, const BitVec& alpha, const CosetSearch& search);

struct DecodeResult {
  /// Correction in the physical frame.
  PauliOperator correction;
  std::size_t weight = 0;
  /// Winning logical-syndrome branch, as an integer (MSB first).
  std::uint64_t branch = 0;
  /// Best weight found in each searched branch, indexed by branch value.
  std::vector<std::size_t> branch_weights;
  std::uint64_t explored = 0;
  bool bounded = false;
};

/// Bounded-distance decoding of a stabilizer syndrome; minimum over logical branches,
/// ties broken by the smallest branch value.
DecodeResult decode(const StabilizerCode& code, const GraphExtraction& ext, const BitVec& beta,
                    const DecodeConfig& cfg = {});

/// CSS decoding on the two halves of the bipartite graph: Z errors light left nodes and
/// are searched with mu on the right, X errors light right nodes and are searched with
/// mu on the left. Throws NotCss unless the code, its logical Z operators and the graph
/// have CSS structure.
DecodeResult decode_css(const StabilizerCode& code, const GraphExtraction& ext, const BitVec& beta,
                        const DecodeConfig& cfg = {});

struct OracleResult {
  /// Present when a matching operator of weight <= w_max exists.
  std::optional<PauliOperator> correction;
  /// Weight of `correction`, or w_max + 1.
  std::size_t weight = 0;
};

/// Lowest-weight Pauli with the given stabilizer syndrome, by exhaustive enumeration.
/// Uses no graph machinery. Throws BudgetExceeded like verify_distance.
OracleResult oracle_decode(const StabilizerCode& code, const BitVec& beta, std::size_t w_max,
                           std::uint64_t budget = 500'000'000ULL);

/// True iff error * correction lies outside the stabilizer group. Throws SyndromeMismatch
/// when the two operators have different stabilizer syndromes.
bool is_logical_error(const StabilizerCode& code, const PauliOperator& error, const PauliOperator& correction);

}  // namespace qgdec
