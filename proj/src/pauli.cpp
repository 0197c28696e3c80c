// Copyright 2026 The DualBloch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dualbloch/pauli.hpp"

#include <cctype>
#include <cmath>

#include "dualbloch/state.hpp"

namespace dualbloch {

namespace {

Pauli pauli_from_char(char c, std::size_t pos) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'I':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
  }
  throw ParseError(std::string("unknown Pauli label '") + c + "'", pos);
}

}  // namespace

char to_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

int axis_index(Pauli p) {
  if (p == Pauli::I) throw InvalidArgument("identity has no Bloch axis");
  return static_cast<int>(p) - 1;
}

Mat2 pauli_matrix(Pauli p) {
  Mat2 m;
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, -kI, kI, 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Generator::Generator(Pauli first, Pauli second) : first_(first), second_(second) {
  if (first == Pauli::I && second == Pauli::I) {
    throw InvalidArgument("II is not a rotation generator");
  }
}

Generator Generator::parse(std::string_view text) {
  if (text.size() != 2) {
    throw ParseError("generator must be two Pauli letters, got '" +
                         std::string(text) + "'",
                     text.size() < 2 ? text.size() : 2);
  }
  // Sequenced so the first bad letter is the one reported.
  const Pauli first = pauli_from_char(text[0], 0);
  const Pauli second = pauli_from_char(text[1], 1);
  return Generator(first, second);
}

int Generator::index() const noexcept {
  const auto& all = all_generators();
  for (int i = 0; i < 15; ++i) {
    if (all[i] == *this) return i;
  }
  return -1;  // unreachable: every valid generator is in the table
}

std::string Generator::name() const {
  return std::string{to_char(first_), to_char(second_)};
}

const std::array<Generator, 15>& all_generators() {
  using P = Pauli;
  static const std::array<Generator, 15> table = {
      Generator(P::X, P::I), Generator(P::Y, P::I), Generator(P::Z, P::I),
      Generator(P::I, P::X), Generator(P::I, P::Y), Generator(P::I, P::Z),
      Generator(P::X, P::X), Generator(P::X, P::Y), Generator(P::X, P::Z),
      Generator(P::Y, P::X), Generator(P::Y, P::Y), Generator(P::Y, P::Z),
      Generator(P::Z, P::X), Generator(P::Z, P::Y), Generator(P::Z, P::Z)};
  return table;
}

Mat4 generator_matrix(const Generator& gen) {
  return kron(pauli_matrix(gen.first()), pauli_matrix(gen.second()));
}

Mat4 rotation_unitary(const Generator& gen, double theta) {
  if (!std::isfinite(theta)) throw InvalidArgument("rotation angle must be finite");
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  Mat4 u = Complex(0, s) * generator_matrix(gen);
  u.diagonal().array() += c;
  return u;
}

}  // namespace dualbloch
