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

#include "qgdec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "qgdec/errors.hpp"

namespace qgdec {

PauliOperator CheckMatrix::column(std::size_t j) const { return PauliOperator(x.column(j), z.column(j)); }

BitMatrix CheckMatrix::stacked() const {
  std::vector<BitVec> rows;
  for (std::size_t r = 0; r < z.rows(); ++r) {
    rows.push_back(z.row(r));
  }
  for (std::size_t r = 0; r < x.rows(); ++r) {
    rows.push_back(x.row(r));
  }
  return BitMatrix::from_rows(std::move(rows), x.cols());
}

CheckMatrix build_check_matrix(const StabilizerCode& code) {
  const auto gens = code.generators();
  CheckMatrix a{BitMatrix(code.n, gens.size()), BitMatrix(code.n, gens.size())};
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t q = 0; q < code.n; ++q) {
      a.x.set(q, j, gens[j].x[q]);
      a.z.set(q, j, gens[j].z[q]);
    }
  }
  return a;
}

namespace {

NormalForm reduce(const CheckMatrix& a, const std::vector<std::size_t>* forced) {
  const std::size_t n_qubits = a.qubits();
  const std::size_t m = a.generators();
  if (m != n_qubits) {
    throw NormalFormError("expected " + std::to_string(n_qubits) + " generators, found " + std::to_string(m));
  }
  std::vector<PauliOperator> gens;
  std::vector<BitVec> combo;
  for (std::size_t j = 0; j < m; ++j) {
    gens.push_back(a.column(j));
    combo.push_back(BitVec::unit(m, j));
  }

  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pivot_of_qubit(n_qubits, kNone);
  std::vector<bool> used(m, false);
  std::vector<std::size_t> scan;
  if (forced) {
    scan = *forced;
    std::sort(scan.begin(), scan.end());
    if (std::adjacent_find(scan.begin(), scan.end()) != scan.end() || (!scan.empty() && scan.back() >= n_qubits)) {
      throw NormalFormError("left qubits must be distinct and in range");
    }
  } else {
    scan.resize(n_qubits);
    std::iota(scan.begin(), scan.end(), 0);
  }
  for (auto q : scan) {
    std::size_t pivot = kNone;
    for (std::size_t g = 0; g < m; ++g) {
      if (!used[g] && gens[g].x[q]) {
        pivot = g;
        break;
      }
    }
    if (pivot == kNone) {
      if (forced) {
        throw NormalFormError("qubit " + std::to_string(q + 1) + " cannot be a left node");
      }
      continue;
    }
    used[pivot] = true;
    pivot_of_qubit[q] = pivot;
    for (std::size_t g = 0; g < m; ++g) {
      if (!used[g] && gens[g].x[q]) {
        gens[g] *= gens[pivot];
        combo[g] ^= combo[pivot];
      }
    }
  }

  NormalForm nf;
  std::vector<std::size_t> order;
  for (std::size_t q = 0; q < n_qubits; ++q) {
    if (pivot_of_qubit[q] != kNone) {
      nf.left.push_back(q);
      order.push_back(pivot_of_qubit[q]);
    } else {
      nf.right.push_back(q);
    }
  }
  for (std::size_t g = 0; g < m; ++g) {
    if (!used[g]) {
      if (gens[g].x.any()) {
        throw NormalFormError("left qubits do not span the X block");
      }
      if (gens[g].is_identity()) {
        throw NormalFormError("generators are linearly dependent");
      }
      order.push_back(g);
    }
  }

  nf.reduced = CheckMatrix{BitMatrix(n_qubits, m), BitMatrix(n_qubits, m)};
  nf.j_elim = BitMatrix(m, m);
  for (std::size_t c = 0; c < m; ++c) {
    const auto& g = gens[order[c]];
    for (std::size_t q = 0; q < n_qubits; ++q) {
      nf.reduced.x.set(q, c, g.x[q]);
      nf.reduced.z.set(q, c, g.z[q]);
    }
    for (auto i : combo[order[c]].ones()) {
      nf.j_elim.set(i, c);
    }
  }
  return nf;
}

}  // namespace

NormalForm normal_form(const CheckMatrix& a) { return reduce(a, nullptr); }

NormalForm normal_form(const CheckMatrix& a, const std::vector<std::size_t>& left) { return reduce(a, &left); }

namespace {

GraphExtraction extract_from(const StabilizerCode& code, const NormalForm& nf) {
  const std::size_t N = code.n;
  const std::size_t n = nf.left.size();

  std::vector<std::size_t> block1(n), block2(N - n);
  for (std::size_t i = 0; i < n; ++i) {
    block1[i] = i;
  }
  for (std::size_t i = 0; i < N - n; ++i) {
    block2[i] = n + i;
  }
  const auto& xr = nf.reduced.x;
  const auto& zr = nf.reduced.z;
  const auto x1l = xr.select(nf.left, block1);
  const auto x1r = xr.select(nf.right, block1);
  const auto z1l = zr.select(nf.left, block1);
  const auto z1r = zr.select(nf.right, block1);
  const auto z2r = zr.select(nf.right, block2);

  const auto x1l_inv = invert(x1l);
  BitMatrix z2r_inv;
  try {
    z2r_inv = invert(z2r);
  } catch (const SingularError&) {
    throw NormalFormError("Z_2r block is singular");
  }

  GraphExtraction ext;
  ext.n = n;
  ext.left_nodes = nf.left;
  ext.right_nodes = nf.right;
  ext.b = matmul(x1r, x1l_inv);
  // C = [Z_1l + (X_1l^T)^-1 X_1r^T Z_1r] X_1l^-1
  ext.c = matmul(z1l + matmul(matmul(invert(x1l.transpose()), x1r.transpose()), z1r), x1l_inv);

  ext.side.assign(N, Side::kLeft);
  ext.phase.assign(N, false);
  for (auto q : nf.right) {
    ext.side[q] = Side::kRight;
  }
  ext.gamma = BitMatrix(N, N);
  for (std::size_t i = 0; i < n; ++i) {
    ext.phase[nf.left[i]] = ext.c.get(i, i);
    for (std::size_t k = 0; k < n; ++k) {
      if (i != k && ext.c.get(i, k)) {
        ext.gamma.set(nf.left[i], nf.left[k]);
      }
    }
  }
  for (std::size_t r = 0; r < N - n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      if (ext.b.get(r, i)) {
        ext.gamma.set(nf.right[r], nf.left[i]);
        ext.gamma.set(nf.left[i], nf.right[r]);
      }
    }
  }

  // J_closed = [[X_1l^-1, 0], [Z_2r^-1 Z_1r X_1l^-1, Z_2r^-1]]
  BitMatrix j_closed(N, N);
  const auto lower_left = matmul(matmul(z2r_inv, z1r), x1l_inv);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      j_closed.set(i, k, x1l_inv.get(i, k));
    }
  }
  for (std::size_t r = 0; r < N - n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      j_closed.set(n + r, k, lower_left.get(r, k));
    }
    for (std::size_t s = 0; s < N - n; ++s) {
      j_closed.set(n + r, n + s, z2r_inv.get(r, s));
    }
  }
  const auto j_total = matmul(nf.j_elim, j_closed);
  ext.j = BitMatrix(N, N);
  for (std::size_t col = 0; col < N; ++col) {
    const std::size_t node = col < n ? nf.left[col] : nf.right[col - n];
    for (std::size_t i = 0; i < N; ++i) {
      ext.j.set(i, node, j_total.get(i, col));
    }
  }

  verify_extraction(code, ext);
  return ext;
}

}  // namespace

GraphExtraction extract(const StabilizerCode& code) { return extract_from(code, normal_form(build_check_matrix(code))); }

GraphExtraction extract(const StabilizerCode& code, const std::vector<std::size_t>& left) {
  return extract_from(code, normal_form(build_check_matrix(code), left));
}

std::vector<std::size_t> GraphExtraction::phase_nodes() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < phase.size(); ++q) {
    if (phase[q]) {
      out.push_back(q);
    }
  }
  return out;
}

bool GraphExtraction::bipartite() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (auto k : gamma.row(i).ones()) {
      if (side[i] == side[k]) {
        return false;
      }
    }
  }
  return true;
}

std::size_t GraphExtraction::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    twice += gamma.row(i).popcount();
  }
  return twice / 2;
}

void verify_extraction(const StabilizerCode& code, const GraphExtraction& ext) {
  const std::size_t N = code.n;
  if (ext.gamma.rows() != N || ext.gamma.cols() != N || ext.j.rows() != N || ext.j.cols() != N ||
      ext.side.size() != N || ext.phase.size() != N) {
    throw ExtractionInvalid("extraction shape does not match the code");
  }
  if (ext.left_nodes.size() + ext.right_nodes.size() != N) {
    throw ExtractionInvalid("left and right nodes do not partition the qubits");
  }
  for (auto q : ext.left_nodes) {
    if (ext.side[q] != Side::kLeft) {
      throw ExtractionInvalid("left node list disagrees with side labels");
    }
  }
  for (auto q : ext.right_nodes) {
    if (ext.side[q] != Side::kRight || ext.phase[q]) {
      throw ExtractionInvalid("right node list disagrees with side or phase labels");
    }
  }
  for (std::size_t i = 0; i < N; ++i) {
    if (ext.gamma.get(i, i)) {
      throw ExtractionInvalid("self-loop at node " + std::to_string(i + 1));
    }
  }
  if (!ext.gamma.is_symmetric()) {
    throw ExtractionInvalid("adjacency matrix is not symmetric");
  }
  if (rank(ext.j) != N) {
    throw ExtractionInvalid("recombination matrix is singular");
  }
  if (code.css()) {
    if (!ext.bipartite()) {
      throw ExtractionInvalid("CSS code produced a non-bipartite graph");
    }
    if (!ext.phase_nodes().empty()) {
      throw ExtractionInvalid("CSS code produced phase nodes");
    }
  }
  const auto gens = code.generators();
  for (std::size_t q = 0; q < N; ++q) {
    PauliOperator g(N);
    for (std::size_t i = 0; i < N; ++i) {
      if (ext.j.get(i, q)) {
        g *= gens[i];
      }
    }
    const auto mapped = frame_map(ext, g, Frame::kPhysicalToGraph);
    if (mapped.x != BitVec::unit(N, q) || mapped.z != ext.gamma.row(q)) {
      throw ExtractionInvalid("graph generator " + std::to_string(q + 1) + " does not match", q);
    }
  }
}

PauliOperator frame_map(const GraphExtraction& ext, const PauliOperator& p, Frame /*direction*/) {
  PauliOperator out = p;
  for (auto q : ext.right_nodes) {
    const bool x = p.x[q];
    out.x.set(q, p.z[q]);
    out.z.set(q, x);
  }
  for (std::size_t q = 0; q < ext.phase.size(); ++q) {
    if (ext.phase[q] && p.x[q]) {
      out.z.flip(q);
    }
  }
  return out;
}

std::string graph_json(const GraphExtraction& ext, int indent) {
  using nlohmann::json;
  json nodes = json::array();
  for (std::size_t q = 0; q < ext.size(); ++q) {
    nodes.push_back({{"id", q + 1}, {"side", ext.side[q] == Side::kLeft ? "left" : "right"}, {"phase", bool(ext.phase[q])}});
  }
  json edges = json::array();
  for (std::size_t i = 0; i < ext.size(); ++i) {
    for (auto k : ext.gamma.row(i).ones()) {
      if (i < k) {
        edges.push_back({i + 1, k + 1});
      }
    }
  }
  json j = json::array();
  for (std::size_t r = 0; r < ext.j.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < ext.j.cols(); ++c) {
      row.push_back(ext.j.get(r, c) ? 1 : 0);
    }
    j.push_back(std::move(row));
  }
  json doc = {{"nodes", nodes}, {"edges", edges}, {"J", j}};
  return doc.dump(indent) + "\n";
}

std::string graph_dot(const GraphExtraction& ext, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (std::size_t q = 0; q < ext.size(); ++q) {
    out << "  " << q + 1;
    if (ext.side[q] == Side::kRight) {
      out << " [shape=box]";
    } else if (ext.phase[q]) {
      out << " [shape=doublecircle]";
    } else {
      out << " [shape=circle]";
    }
    out << ";\n";
  }
  for (std::size_t i = 0; i < ext.size(); ++i) {
    for (auto k : ext.gamma.row(i).ones()) {
      if (i < k) {
        out << "  " << i + 1 << " -- " << k + 1 << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace qgdec
