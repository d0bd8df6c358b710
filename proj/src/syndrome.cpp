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

#include "qgdec/syndrome.hpp"

#include "qgdec/errors.hpp"

namespace qgdec {

BitVec measure_beta(const StabilizerCode& code, const PauliOperator& error) {
  BitVec beta(code.stabilizers.size());
  for (std::size_t j = 0; j < code.stabilizers.size(); ++j) {
    beta.set(j, symplectic_product(error, code.stabilizers[j]));
  }
  return beta;
}

BitVec measure_beta_tilde(const StabilizerCode& code, const PauliOperator& error) {
  BitVec beta(code.logical_z.size());
  for (std::size_t j = 0; j < code.logical_z.size(); ++j) {
    beta.set(j, symplectic_product(error, code.logical_z[j]));
  }
  return beta;
}

BitVec alpha_from_gamma(const GraphExtraction& ext, const BitVec& gamma) { return vecmul(gamma, ext.j); }

BitVec alpha_direct(const GraphExtraction& ext, const PauliOperator& error) {
  const auto g = frame_map(ext, error, Frame::kPhysicalToGraph);
  return vecmul(g.x, ext.gamma) ^ g.z;
}

SyndromeSet measure(const StabilizerCode& code, const GraphExtraction& ext, const PauliOperator& error) {
  SyndromeSet s;
  s.beta = measure_beta(code, error);
  s.beta_tilde = measure_beta_tilde(code, error);
  s.gamma = BitVec::concat(s.beta, s.beta_tilde);
  s.alpha = alpha_from_gamma(ext, s.gamma);
  return s;
}

BitVec parse_syndrome(std::string_view text, std::size_t length) {
  if (text.size() != length) {
    throw ParseError("syndrome has " + std::to_string(text.size()) + " bits, expected " + std::to_string(length));
  }
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("syndrome must contain only '0' and '1'");
    }
  }
  return BitVec::from_string(text);
}

}  // namespace qgdec
