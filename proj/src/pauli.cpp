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

#include "qgdec/pauli.hpp"

#include <cctype>
#include <charconv>

#include "qgdec/errors.hpp"

namespace qgdec {

PauliOperator::PauliOperator(BitVec x_part, BitVec z_part) : x(std::move(x_part)), z(std::move(z_part)) {
  if (x.size() != z.size()) {
    throw DimensionError("x and z parts differ in length");
  }
}

PauliOperator PauliOperator::parse(std::string_view text) {
  PauliOperator p(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (c != 'I' && c != '_' && c != 'X' && c != 'Y' && c != 'Z') {
      throw ParseError("invalid Pauli character '" + std::string(1, text[i]) + "' at position " +
                       std::to_string(i));
    }
    p.set(i, c);
  }
  return p;
}

PauliOperator PauliOperator::parse_sparse(std::size_t num_qubits, std::string_view text) {
  PauliOperator p(num_qubits);
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == text.size()) {
      break;
    }
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    ++pos;
    if (c == 'I' && (pos == text.size() || std::isspace(static_cast<unsigned char>(text[pos])))) {
      continue;
    }
    if (c != 'X' && c != 'Y' && c != 'Z') {
      throw ParseError("invalid sparse Pauli term near '" + std::string(text.substr(pos - 1)) + "'");
    }
    std::size_t qubit = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), qubit);
    if (ec != std::errc() || qubit == 0 || qubit > num_qubits) {
      throw ParseError("bad qubit index in sparse Pauli '" + std::string(text) + "'");
    }
    pos = static_cast<std::size_t>(end - text.data());
    if (p.at(qubit - 1) != 'I') {
      throw ParseError("qubit " + std::to_string(qubit) + " listed twice in '" + std::string(text) + "'");
    }
    p.set(qubit - 1, c);
  }
  return p;
}

PauliOperator PauliOperator::single(std::size_t num_qubits, std::size_t qubit, char pauli) {
  PauliOperator p(num_qubits);
  p.set(qubit, pauli);
  return p;
}

char PauliOperator::at(std::size_t qubit) const {
  static constexpr char kNames[4] = {'I', 'X', 'Z', 'Y'};
  return kNames[static_cast<int>(x.get(qubit)) | (static_cast<int>(z.get(qubit)) << 1)];
}

void PauliOperator::set(std::size_t qubit, char pauli) {
  switch (pauli) {
    case 'I':
    case '_':
      x.set(qubit, false);
      z.set(qubit, false);
      break;
    case 'X':
      x.set(qubit, true);
      z.set(qubit, false);
      break;
    case 'Z':
      x.set(qubit, false);
      z.set(qubit, true);
      break;
    case 'Y':
      x.set(qubit, true);
      z.set(qubit, true);
      break;
    default:
      throw ParseError("invalid Pauli character '" + std::string(1, pauli) + "'");
  }
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& other) {
  x ^= other.x;
  z ^= other.z;
  return *this;
}

std::string PauliOperator::str() const {
  std::string s(size(), 'I');
  for (std::size_t i = 0; i < size(); ++i) {
    s[i] = at(i);
  }
  return s;
}

bool symplectic_product(const PauliOperator& p, const PauliOperator& q) {
  if (p.size() != q.size()) {
    throw DimensionError("Pauli operators act on different qubit counts");
  }
  return p.x.dot(q.z) != p.z.dot(q.x);
}

}  // namespace qgdec
