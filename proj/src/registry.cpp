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

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <utility>

#include "qgdec/code.hpp"

namespace qgdec {

namespace {

struct TableCode {
  const char* name;
  std::size_t n;
  std::size_t d;
  std::vector<const char*> stabilizers;
  const char* logical_z;
  const char* logical_x;
};

// Non-CSS [[N,1,d]] codes in sparse notation, qubits numbered from 1.
const std::vector<TableCode>& noncss_table() {
  static const std::vector<TableCode> table = {
    {"noncss11", 11, 5,
     {
        "X1 X6 Z7 Z8 X10 X11",
        "Z1 Z6 X7 Y8 Y9 X11",
        "X2 X6 Z7 Y8 Z9 Y11",
        "Z2 Z6 Z7 Z8 Y9 Y10",
        "X3 X6 Z7 X8 X9 Z10",
        "Z3 Z6 Y7 Y9 Z10 Z11",
        "X4 X6 Y7 X9 X10 Y11",
        "Z4 Z6 Z8 X9 Z10 X11",
        "X5 X6 X7 Z9 Z10 X11",
        "Z5 Z6 Y8 Z9 Y10 Z11",
     },
     "Z2 X5 Y6 Z7 Y8",
     "X2 X3 Z7 X9 X11"},
    {"noncss17", 17, 7,
     {
        "X1 X9 Z10 Y11 Y12 Y15 Y16 Z17",
        "Z1 Z9 Y10 X11 X12 X15 X16 Y17",
        "X2 Z9 Z10 Y11 Z12 Y13 X15 Z16",
        "Z2 Y9 Y10 X11 Y12 X13 Z15 Y16",
        "X3 Z10 Z11 Y12 Z13 Y14 X16 Z17",
        "Z3 Y10 Y11 X12 Y13 X14 Z16 Y17",
        "X4 Z9 Y10 Y11 Y12 Y13 Z14 Z15 X16 Z17",
        "Z4 Y9 X10 X11 X12 X13 Y14 Y15 Z16 Y17",
        "X5 Z9 X10 Z11 Z12 Y13 Y14 Y15 Y16 Z17",
        "Z5 Y9 Z10 Y11 Y12 X13 X14 X15 X16 Y17",
        "X6 Z9 X10 Y12 Z13 Y14 Z15 Z16",
        "Z6 Y9 Z10 X12 Y13 X14 Y15 Y16",
        "X7 Z10 X11 Y13 Z14 Y15 Z16 Z17",
        "Z7 Y10 Z11 X13 Y14 X15 Y16 Y17",
        "X8 Z9 Y10 Y11 Y14 Y15 Z16 X17",
        "Z8 Y9 X10 X11 X14 X15 Y16 Z17",
     },
     "X2 Z5 Y6 Y7 X8 Z12 X17",
     "Y1 Y3 X8 Y12 Z13 Z14 X15"},
    {"noncss25", 25, 9,
     {
        "X1 Y4 Y5 Z13 Y14 X15 X18 Z19 Y20 Y23 X24 Z25",
        "Z1 X4 X5 Y13 X14 Z15 Z18 Y19 X20 X23 Z24 Y25",
        "X2 Y4 Z5 Y13 X14 Z15 Z18 Y19 X20 X23 Z24 Y25",
        "Z2 X4 Y5 X13 Z14 Y15 Y18 X19 Z20 Z23 Y24 X25",
        "X3 Z4 Y5 Y13 X14 Z15 Z18 Y19 X20 X23 Z24 Y25",
        "Z3 Y4 X5 X13 Z14 Y15 Y18 X19 Z20 Z23 Y24 X25",
        "X6 Y9 Y10 Y13 X14 Z15 Y18 X19 Z20 Y23 X24 Z25",
        "Z6 X9 X10 X13 Z14 Y15 X18 Z19 Y20 X23 Z24 Y25",
        "X7 Y9 Z10 X13 Z14 Y15 X18 Z19 Y20 X23 Z24 Y25",
        "Z7 X9 Y10 Z13 Y14 X15 Z18 Y19 X20 Z23 Y24 X25",
        "X8 Z9 Y10 X13 Z14 Y15 X18 Z19 Y20 X23 Z24 Y25",
        "Z8 Y9 X10 Z13 Y14 X15 Z18 Y19 X20 Z23 Y24 X25",
        "X11 Y13 Z14 X15",
        "Z11 X13 Y14 Z15",
        "X12 X13 X14 X15",
        "Z12 Z13 Z14 Z15",
        "X16 Y18 Z19 X20",
        "Z16 X18 Y19 Z20",
        "X17 X18 X19 X20",
        "Z17 Z18 Z19 Z20",
        "X21 Y23 Z24 X25",
        "Z21 X23 Y24 Z25",
        "X22 X23 X24 X25",
        "Z22 Z23 Z24 Z25",
     },
     "X1 Y4 Y5 Y7 Z8 X9 X16 Z18 Z20",
     "Y6 Y8 Y9 Y17 Z19 X20 Y22 X23 Z25"},
    {"noncss29", 29, 11,
     {
        "X1 X15 Y16 Z17 Z18 X19 Z20 Z21 X22 X23 Z24 Z25 X26 Z27 Z28 Y29",
        "Z1 Z15 X16 Y17 Y18 Z19 Y20 Y21 Z22 Z23 Y24 Y25 Z26 Y27 Y28 X29",
        "X2 Y15 Y16 Z17 Y18 X19 Y21 X22 Z23 Y25 X26 Y28",
        "Z2 X15 X16 Y17 X18 Z19 X21 Z22 Y23 X25 Z26 X28",
        "X3 Y16 Y17 Z18 Y19 X20 Y22 X23 Z24 Y26 X27 Y29",
        "Z3 X16 X17 Y18 X19 Z20 X22 Z23 Y24 X26 Z27 X29",
        "X4 Y15 Z16 Z17 Z18 X19 Z20 Y22 Y25 Y26 Z27 Z29",
        "Z4 X15 Y16 Y17 Y18 Z19 Y20 X22 X25 X26 Y27 Y29",
        "X5 Z15 Z16 X17 X18 Z20 X21 Z22 X23 Y24 Y25 X26 X28 X29",
        "Z5 Y15 Y16 Z17 Z18 Y20 Z21 Y22 Z23 X24 X25 Z26 Z28 Z29",
        "X6 X15 X16 Y18 Z20 Y23 Y24 X25 Z26 Y27 Z28 Z29",
        "Z6 Z15 Z16 X18 Y20 X23 X24 Z25 Y26 X27 Y28 Y29",
        "X7 Z15 Z17 Y18 X19 Y20 X21 Z22 Z23 Y26 X27 Y29",
        "Z7 Y15 Y17 X18 Z19 X20 Z21 Y22 Y23 X26 Z27 X29",
        "X8 Y15 X17 Y18 Z21 Z22 X23 Y24 X25 Y26 Z27 Z29",
        "Z8 X15 Z17 X18 Y21 Y22 Z23 X24 Z25 X26 Y27 Y29",
        "X9 Z15 Z16 Y17 Z18 X19 Y20 Y21 Z24 Y26 X28 X29",
        "Z9 Y15 Y16 X17 Y18 Z19 X20 X21 Y24 X26 Z28 Z29",
        "X10 X15 X16 X18 Y19 Y20 X21 Z22 X23 Z24 X26 X27 Z28 Z29",
        "Z10 Z15 Z16 Z18 X19 X20 Z21 Y22 Z23 Y24 Z26 Z27 Y28 Y29",
        "X11 Z15 Z17 Y18 Y19 Y22 Z24 X25 Z26 Z27 Z28 Y29",
        "Z11 Y15 Y17 X18 X19 X22 Y24 Z25 Y26 Y27 Y28 X29",
        "X12 Y15 X17 Y18 Z20 X21 Y22 X24 Y25 Z26 Y27 Y28",
        "Z12 X15 Z17 X18 Y20 Z21 X22 Z24 X25 Y26 X27 X28",
        "X13 Y16 X18 Y19 Z21 X22 Y23 X25 Y26 Z27 Y28 Y29",
        "Z13 X16 Z18 X19 Y21 Z22 X23 Z25 X26 Y27 X28 X29",
        "X14 Y15 Z16 Z17 X18 Z19 Z20 X21 X22 Z23 Z24 X25 Z26 Z27 Y28 X29",
        "Z14 X15 Y16 Y17 Z18 Y19 Y20 Z21 Z22 Y23 Y24 Z25 Y26 Y27 X28 Z29",
     },
     "Z4 X10 X12 Y13 Y14 Z15 Y17 X22 X24 X27 Y29",
     "Z5 X8 Y9 X12 Y15 X18 Z20 Y24 Y26 X27 Z29"},
  };
  return table;
}

StabilizerCode from_sparse(std::string name, std::size_t n, std::size_t d,
                           const std::vector<const char*>& stabilizers, const char* lz, const char* lx) {
  StabilizerCode code;
  code.name = std::move(name);
  code.n = n;
  code.k = 1;
  code.d = d;
  for (const char* s : stabilizers) {
    code.stabilizers.push_back(PauliOperator::parse_sparse(n, s));
  }
  code.logical_z.push_back(PauliOperator::parse_sparse(n, lz));
  code.logical_x.push_back(PauliOperator::parse_sparse(n, lx));
  return code;
}

StabilizerCode five_qubit() {
  return from_sparse("five_qubit", 5, 3,
                     {"X1 Z2 Z3 X4", "X2 Z3 Z4 X5", "X1 X3 Z4 Z5", "Z1 X2 X4 Z5"},
                     "Y1 Y2 X4", "Y2 Z4 Z5");
}

StabilizerCode steane() {
  return from_sparse("steane", 7, 3,
                     {"X1 X2 X3 X4", "X2 X3 X5 X6", "X3 X4 X6 X7", "Z1 Z2 Z3 Z4", "Z2 Z3 Z5 Z6", "Z3 Z4 Z6 Z7"},
                     "Z5 Z6 Z7", "X1 X2 X5");
}

PauliOperator typed(std::size_t n, const std::vector<std::size_t>& support, char pauli) {
  PauliOperator op(n);
  for (auto q : support) {
    op.set(q, pauli);
  }
  return op;
}

// Triangular patch of the hexagonal color code. Lattice points (i, j) with i, j >= 0 and
// i + j <= L; points with (i - j) mod 3 == 1 are plaquette centres, the rest are qubits.
StabilizerCode color_code(std::size_t d) {
  const long L = static_cast<long>(3 * (d - 1) / 2);
  auto is_face = [](long i, long j) { return ((i - j) % 3 + 3) % 3 == 1; };
  auto inside = [L](long i, long j) { return i >= 0 && j >= 0 && i + j <= L; };

  std::map<std::pair<long, long>, std::size_t> qubit;
  std::vector<std::pair<long, long>> faces;
  for (long j = 0; j <= L; ++j) {
    for (long i = 0; i + j <= L; ++i) {
      if (is_face(i, j)) {
        faces.emplace_back(i, j);
      } else {
        const auto next = qubit.size();
        qubit[{i, j}] = next;
      }
    }
  }
  const std::size_t n = qubit.size();
  static constexpr std::pair<long, long> kNeighbours[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};

  std::vector<std::vector<std::size_t>> supports;
  for (auto [fi, fj] : faces) {
    std::vector<std::size_t> support;
    for (auto [di, dj] : kNeighbours) {
      if (inside(fi + di, fj + dj)) {
        support.push_back(qubit.at({fi + di, fj + dj}));
      }
    }
    std::sort(support.begin(), support.end());
    supports.push_back(std::move(support));
  }

  StabilizerCode code;
  code.name = "color:" + std::to_string(d);
  code.n = n;
  code.k = 1;
  code.d = d;
  for (const auto& s : supports) {
    code.stabilizers.push_back(typed(n, s, 'X'));
  }
  for (const auto& s : supports) {
    code.stabilizers.push_back(typed(n, s, 'Z'));
  }
  std::vector<std::size_t> edge;
  for (long i = 0; i <= L; ++i) {
    if (!is_face(i, 0)) {
      edge.push_back(qubit.at({i, 0}));
    }
  }
  code.logical_z.push_back(typed(n, edge, 'Z'));
  code.logical_x.push_back(typed(n, edge, 'X'));
  return code;
}

// Rotated surface code on a d x d grid of qubits (r, c), 1-based.
StabilizerCode surface_code(std::size_t d) {
  const std::size_t n = d * d;
  auto q = [d](std::size_t r, std::size_t c) { return (r - 1) * d + (c - 1); };
  std::vector<PauliOperator> x_checks;
  std::vector<PauliOperator> z_checks;
  for (std::size_t r = 1; r < d; ++r) {
    for (std::size_t c = 1; c < d; ++c) {
      std::vector<std::size_t> cell = {q(r, c), q(r, c + 1), q(r + 1, c), q(r + 1, c + 1)};
      if ((r + c) % 2 == 0) {
        z_checks.push_back(typed(n, cell, 'Z'));
      } else {
        x_checks.push_back(typed(n, cell, 'X'));
      }
    }
  }
  for (std::size_t c = 1; c < d; c += 2) {
    x_checks.push_back(typed(n, {q(1, c), q(1, c + 1)}, 'X'));
  }
  for (std::size_t c = 2; c < d; c += 2) {
    x_checks.push_back(typed(n, {q(d, c), q(d, c + 1)}, 'X'));
  }
  for (std::size_t r = 2; r < d; r += 2) {
    z_checks.push_back(typed(n, {q(r, 1), q(r + 1, 1)}, 'Z'));
  }
  for (std::size_t r = 1; r < d; r += 2) {
    z_checks.push_back(typed(n, {q(r, d), q(r + 1, d)}, 'Z'));
  }

  StabilizerCode code;
  code.name = "surface:" + std::to_string(d);
  code.n = n;
  code.k = 1;
  code.d = d;
  code.stabilizers = std::move(x_checks);
  code.stabilizers.insert(code.stabilizers.end(), z_checks.begin(), z_checks.end());
  std::vector<std::size_t> row, column;
  for (std::size_t i = 1; i <= d; ++i) {
    row.push_back(q(1, i));
    column.push_back(q(i, 1));
  }
  code.logical_z.push_back(typed(n, row, 'Z'));
  code.logical_x.push_back(typed(n, column, 'X'));
  return code;
}

}  // namespace

StabilizerCode build_family(CodeFamily family, std::size_t d) {
  if (d < 3 || d % 2 == 0) {
    throw std::invalid_argument("code distance must be odd and at least 3, got " + std::to_string(d));
  }
  StabilizerCode code = family == CodeFamily::kColor ? color_code(d) : surface_code(d);
  validate(code);
  return code;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names = {"five_qubit", "steane"};
  for (const auto& entry : noncss_table()) {
    names.emplace_back(entry.name);
  }
  names.emplace_back("color:<d>");
  names.emplace_back("surface:<d>");
  return names;
}

StabilizerCode builtin_code(std::string_view name) {
  if (name == "five_qubit") {
    return five_qubit();
  }
  if (name == "steane") {
    return steane();
  }
  for (const auto& entry : noncss_table()) {
    if (name == entry.name) {
      return from_sparse(entry.name, entry.n, entry.d, entry.stabilizers, entry.logical_z, entry.logical_x);
    }
  }
  const auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    const auto family = name.substr(0, colon);
    const auto arg = name.substr(colon + 1);
    std::size_t d = 0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), d);
    if (ec == std::errc() && ptr == arg.data() + arg.size() && !arg.empty()) {
      if (family == "color") {
        return build_family(CodeFamily::kColor, d);
      }
      if (family == "surface") {
        return build_family(CodeFamily::kSurface, d);
      }
    }
  }
  throw std::invalid_argument("unknown code '" + std::string(name) + "'");
}

StabilizerCode resolve_code(std::string_view name_or_path) {
  const std::filesystem::path path{std::string(name_or_path)};
  if (std::filesystem::is_regular_file(path)) {
    return load_code_file(path);
  }
  return builtin_code(name_or_path);
}

}  // namespace qgdec
