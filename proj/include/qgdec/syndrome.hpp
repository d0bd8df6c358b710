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

#include <string_view>

#include "qgdec/bitvec.hpp"
#include "qgdec/code.hpp"
#include "qgdec/graph.hpp"
#include "qgdec/pauli.hpp"

namespace qgdec {

/// Stabilizer syndrome: bit j is 1 iff E anticommutes with S_j.
BitVec measure_beta(const StabilizerCode& code, const PauliOperator& error);
/// Logical syndrome: bit j is 1 iff E anticommutes with LZ_j.
BitVec measure_beta_tilde(const StabilizerCode& code, const PauliOperator& error);

/// alpha = gamma * J.
BitVec alpha_from_gamma(const GraphExtraction& ext, const BitVec& gamma);
/// Graph syndrome read off the graph frame: (mu, nu) -> mu * Gamma + nu.
BitVec alpha_direct(const GraphExtraction& ext, const PauliOperator& error);

struct SyndromeSet {
  BitVec beta;
  BitVec beta_tilde;
  BitVec gamma;
  BitVec alpha;
};

SyndromeSet measure(const StabilizerCode& code, const GraphExtraction& ext, const PauliOperator& error);

/// Parses a '0'/'1' string of exactly `length` bits.
BitVec parse_syndrome(std::string_view text, std::size_t length);

}  // namespace qgdec
