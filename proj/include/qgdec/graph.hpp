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
#include <vector>

#include "qgdec/bitmatrix.hpp"
#include "qgdec/code.hpp"
#include "qgdec/pauli.hpp"

namespace qgdec {

/// Check matrix of the generator set S_1..S_{N-k}, LZ_1..LZ_k. Rows are qubits,
/// column j is generator j; the full matrix stacks `z` over `x`.
struct CheckMatrix {
  BitMatrix z;
  BitMatrix x;

  std::size_t qubits() const { return x.rows(); }
  std::size_t generators() const { return x.cols(); }
  /// Generator j as a Pauli operator.
  PauliOperator column(std::size_t j) const;
  /// The 2N x N stacked form (z over x).
  BitMatrix stacked() const;
};

CheckMatrix build_check_matrix(const StabilizerCode& code);

/// Result of reducing the X block to (X_1 | 0).
///
/// Columns of `reduced` are ordered as the n pivot generators (one per left qubit, in
/// left-qubit order) followed by the N-n X-free generators. `reduced == A * j_elim`.
struct NormalForm {
  CheckMatrix reduced;
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  BitMatrix j_elim;
};

/// Gaussian elimination on the X block with the lowest-index pivot rule: qubits are
/// scanned in order and the lowest-index unused generator with an X on that qubit
/// becomes its pivot. Throws NormalFormError if the generators are not full rank or
/// Z_2r is singular.
NormalForm normal_form(const CheckMatrix& a);
/// Same elimination with a prescribed set of left qubits. Throws NormalFormError when
/// the X block restricted to `left` is not invertible or does not span the X block.
NormalForm normal_form(const CheckMatrix& a, const std::vector<std::size_t>& left);

enum class Side { kLeft, kRight };

/// Graph equivalent of a stabilizer code up to local Cliffords.
///
/// Node q is qubit q. The graph generator at node q is the product of the original
/// generators i with J(i, q) = 1, taken to the graph frame by frame_map.
struct GraphExtraction {
  std::size_t n = 0;
  std::vector<std::size_t> left_nodes;
  std::vector<std::size_t> right_nodes;
  std::vector<Side> side;
  /// Left nodes carrying a phase gate in the local frame.
  std::vector<bool> phase;
  BitMatrix gamma;
  BitMatrix j;
  /// Blocks of the closed form in left || right order, kept for inspection.
  BitMatrix b;
  BitMatrix c;

  std::size_t size() const { return gamma.rows(); }
  std::vector<std::size_t> phase_nodes() const;
  std::vector<std::size_t> neighbours(std::size_t node) const { return gamma.row(node).ones(); }
  /// No edge joins two nodes on the same side.
  bool bipartite() const;
  std::size_t edge_count() const;
};

/// Builds the graph, J and local frame. The result always passes verify_extraction.
GraphExtraction extract(const StabilizerCode& code);
/// Extraction with a prescribed left partition (any admissible choice gives a valid graph).
GraphExtraction extract(const StabilizerCode& code, const std::vector<std::size_t>& left);

/// Throws ExtractionInvalid if the graph generators do not match the recombined and
/// frame-mapped code generators, Γ is not a simple graph, J is singular, or a CSS code
/// gives a non-bipartite graph or phase nodes.
void verify_extraction(const StabilizerCode& code, const GraphExtraction& ext);

enum class Frame { kPhysicalToGraph, kGraphToPhysical };

/// Per-qubit local Clifford substitution: Hadamard on right nodes, phase gate on phase
/// nodes. Both directions use the same symplectic map.
PauliOperator frame_map(const GraphExtraction& ext, const PauliOperator& p, Frame direction);

/// {nodes:[{id,side,phase}], edges:[[i,j]...], J:[[...]...]} with 1-based node ids.
std::string graph_json(const GraphExtraction& ext, int indent = 2);
/// Undirected DOT graph; right nodes drawn as boxes, phase nodes double-circled.
std::string graph_dot(const GraphExtraction& ext, const std::string& name = "G");

}  // namespace qgdec
