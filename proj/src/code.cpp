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

#include "qgdec/code.hpp"

#include <array>
#include <fstream>
#include <limits>
#include <sstream>

#include "qgdec/bitmatrix.hpp"
#include "qgdec/errors.hpp"

namespace qgdec {

namespace {

std::string op_label(const char* prefix, std::size_t index) { return std::string(prefix) + std::to_string(index + 1); }

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

bool StabilizerCode::css() const {
  for (const auto& s : stabilizers) {
    if (!s.is_x_type() && !s.is_z_type()) {
      return false;
    }
  }
  return true;
}

std::vector<PauliOperator> StabilizerCode::generators() const {
  std::vector<PauliOperator> out = stabilizers;
  out.insert(out.end(), logical_z.begin(), logical_z.end());
  return out;
}

void validate(const StabilizerCode& code) {
  if (code.k > code.n) {
    throw ValidationError("k exceeds N");
  }
  if (code.stabilizers.size() != code.n - code.k) {
    throw ValidationError("expected " + std::to_string(code.n - code.k) + " stabilizers, found " +
                          std::to_string(code.stabilizers.size()));
  }
  if (code.logical_z.size() != code.k || code.logical_x.size() != code.k) {
    throw ValidationError("expected " + std::to_string(code.k) + " logical Z and X operators");
  }
  auto check_size = [&](const PauliOperator& p, const std::string& label) {
    if (p.size() != code.n) {
      throw ValidationError(label + " acts on " + std::to_string(p.size()) + " qubits, expected " +
                            std::to_string(code.n));
    }
  };
  for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
    check_size(code.stabilizers[i], op_label("S", i));
  }
  for (std::size_t j = 0; j < code.k; ++j) {
    check_size(code.logical_z[j], op_label("LZ", j));
    check_size(code.logical_x[j], op_label("LX", j));
  }

  const auto& s = code.stabilizers;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (symplectic_product(s[i], s[j])) {
        throw CommutationError(op_label("S", i), op_label("S", j));
      }
    }
    for (std::size_t j = 0; j < code.k; ++j) {
      if (symplectic_product(s[i], code.logical_z[j])) {
        throw CommutationError(op_label("S", i), op_label("LZ", j));
      }
      if (symplectic_product(s[i], code.logical_x[j])) {
        throw CommutationError(op_label("S", i), op_label("LX", j));
      }
    }
  }

  for (std::size_t i = 0; i < code.k; ++i) {
    for (std::size_t j = 0; j < code.k; ++j) {
      const bool anti = symplectic_product(code.logical_z[i], code.logical_x[j]);
      if (anti != (i == j)) {
        throw LogicalPairingError(op_label("LZ", i) + (anti ? " anticommutes with " : " commutes with ") +
                                  op_label("LX", j));
      }
      if (i < j && symplectic_product(code.logical_z[i], code.logical_z[j])) {
        throw LogicalPairingError(op_label("LZ", i) + " anticommutes with " + op_label("LZ", j));
      }
      if (i < j && symplectic_product(code.logical_x[i], code.logical_x[j])) {
        throw LogicalPairingError(op_label("LX", i) + " anticommutes with " + op_label("LX", j));
      }
    }
  }

  RowSpace span(2 * code.n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!span.insert(s[i].symplectic_row())) {
      throw DependenceError(op_label("S", i) + " is a product of earlier stabilizers");
    }
  }
  for (std::size_t j = 0; j < code.k; ++j) {
    if (!span.insert(code.logical_z[j].symplectic_row())) {
      throw DependenceError(op_label("LZ", j) + " lies in the span of the stabilizers and earlier logicals");
    }
  }
}

StabilizerCode load_code(std::string_view text, std::string name) {
  StabilizerCode code;
  code.name = std::move(name);
  bool have_header = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    std::istringstream fields{std::string(line)};
    if (!have_header) {
      long long n = -1, k = -1, d = -1;
      std::string extra;
      if (!(fields >> n >> k >> d) || (fields >> extra) || n <= 0 || k < 0 || d <= 0 || k > n) {
        throw ParseError("expected header 'N k d'", line_no);
      }
      code.n = static_cast<std::size_t>(n);
      code.k = static_cast<std::size_t>(k);
      code.d = static_cast<std::size_t>(d);
      have_header = true;
      continue;
    }
    std::string tag, pauli, extra;
    if (!(fields >> tag >> pauli) || (fields >> extra)) {
      throw ParseError("expected '<S|LZ|LX> <pauli-string>'", line_no);
    }
    PauliOperator op;
    try {
      op = PauliOperator::parse(pauli);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (op.size() != code.n) {
      throw ParseError("Pauli string has length " + std::to_string(op.size()) + ", expected " +
                           std::to_string(code.n),
                       line_no);
    }
    if (tag == "S") {
      code.stabilizers.push_back(std::move(op));
    } else if (tag == "LZ") {
      code.logical_z.push_back(std::move(op));
    } else if (tag == "LX") {
      code.logical_x.push_back(std::move(op));
    } else {
      throw ParseError("unknown tag '" + tag + "'", line_no);
    }
  }
  if (!have_header) {
    throw ParseError("empty code file");
  }
  validate(code);
  return code;
}

StabilizerCode load_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open code file '" + path.string() + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return load_code(buf.str(), path.stem().string());
}

std::string format_code(const StabilizerCode& code) {
  std::ostringstream out;
  out << "# " << code.name << " [[" << code.n << "," << code.k << "," << code.d << "]]\n";
  out << code.n << ' ' << code.k << ' ' << code.d << '\n';
  for (const auto& s : code.stabilizers) {
    out << "S " << s.str() << '\n';
  }
  for (const auto& l : code.logical_z) {
    out << "LZ " << l.str() << '\n';
  }
  for (const auto& l : code.logical_x) {
    out << "LX " << l.str() << '\n';
  }
  return out.str();
}

bool in_stabilizer_group(const StabilizerCode& code, const PauliOperator& op) {
  RowSpace span(2 * code.n);
  for (const auto& s : code.stabilizers) {
    span.insert(s.symplectic_row());
  }
  return span.contains(op.symplectic_row());
}

std::uint64_t pauli_ball_size(std::size_t n, std::size_t w) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t term = 1;  // C(n,q) 3^q
  for (std::size_t q = 0; q <= w && q <= n; ++q) {
    if (q > 0) {
      // term *= 3 (n-q+1) / q, exact because C(n,q) q = C(n,q-1) (n-q+1).
      const std::uint64_t num = 3ULL * (n - q + 1);
      if (term > kMax / num) {
        return kMax;
      }
      term = term * num / q;
    }
    if (total > kMax - term) {
      return kMax;
    }
    total += term;
  }
  return total;
}

DistanceResult verify_distance(const StabilizerCode& code, std::size_t w_max, std::uint64_t budget) {
  const std::size_t n = code.n;
  w_max = std::min(w_max, n);
  if (pauli_ball_size(n, w_max) > budget) {
    throw BudgetExceeded("distance search over weight <= " + std::to_string(w_max) + " on " + std::to_string(n) +
                         " qubits exceeds the enumeration budget");
  }
  static constexpr std::array<char, 3> kPaulis = {'X', 'Z', 'Y'};
  const std::size_t m = code.stabilizers.size();

  // columns[q][t]: syndrome of Pauli kPaulis[t] on qubit q.
  std::vector<std::array<BitVec, 3>> columns(n);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t t = 0; t < 3; ++t) {
      const auto single = PauliOperator::single(n, q, kPaulis[t]);
      BitVec syn(m);
      for (std::size_t j = 0; j < m; ++j) {
        syn.set(j, symplectic_product(single, code.stabilizers[j]));
      }
      columns[q][t] = std::move(syn);
    }
  }
  RowSpace group(2 * n);
  for (const auto& s : code.stabilizers) {
    group.insert(s.symplectic_row());
  }

  DistanceResult result;
  std::vector<BitVec> syndrome(w_max + 1, BitVec(m));
  std::vector<std::pair<std::size_t, std::size_t>> chosen(w_max);
  for (std::size_t w = 1; w <= w_max; ++w) {
    bool found = false;
    auto dfs = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
      for (std::size_t q = start; q + (w - depth) <= n && !found; ++q) {
        for (std::size_t t = 0; t < 3 && !found; ++t) {
          syndrome[depth + 1] = syndrome[depth];
          syndrome[depth + 1] ^= columns[q][t];
          chosen[depth] = {q, t};
          if (depth + 1 < w) {
            self(self, q + 1, depth + 1);
            continue;
          }
          if (syndrome[depth + 1].any()) {
            continue;
          }
          PauliOperator op(n);
          for (std::size_t i = 0; i < w; ++i) {
            op.set(chosen[i].first, kPaulis[chosen[i].second]);
          }
          if (!group.contains(op.symplectic_row())) {
            found = true;
            result.witness = std::move(op);
          }
        }
      }
    };
    dfs(dfs, 0, 0);
    if (found) {
      result.weight = w;
      result.exact = true;
      return result;
    }
  }
  result.weight = w_max + 1;
  return result;
}

}  // namespace qgdec
