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

#pragma once

#include <array>
#include <string>
#include <string_view>

#include "dualbloch/common.hpp"

namespace dualbloch {

enum class Pauli { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);

/// Bloch-axis index (0 = x, 1 = y, 2 = z) of a non-identity Pauli.
int axis_index(Pauli p);

/// I, sigma_x, sigma_y = [[0,-i],[i,0]], sigma_z.
Mat2 pauli_matrix(Pauli p);

/// Ordered tensor factor pair sigma_first (x) sigma_second, never I (x) I.
class Generator {
 public:
  /// Throws InvalidArgument for (I, I).
  Generator(Pauli first, Pauli second);

  /// Parses two-letter names such as "XY" or "IZ" (case-insensitive).
  static Generator parse(std::string_view text);

  Pauli first() const noexcept { return first_; }
  Pauli second() const noexcept { return second_; }

  /// Exactly one factor is the identity.
  bool is_local() const noexcept {
    return (first_ == Pauli::I) != (second_ == Pauli::I);
  }
  bool is_double_pauli() const noexcept {
    return first_ != Pauli::I && second_ != Pauli::I;
  }

  /// Position in all_generators(), 0..14.
  int index() const noexcept;

  std::string name() const;

  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  Pauli first_;
  Pauli second_;
};

/// The 15 generators in interface order:
/// XI YI ZI IX IY IZ XX XY XZ YX YY YZ ZX ZY ZZ.
const std::array<Generator, 15>& all_generators();

/// Kronecker product pauli(first) (x) pauli(second).
Mat4 generator_matrix(const Generator& gen);

/// cos(theta/2) I + i sin(theta/2) G, i.e. exp(+i theta G / 2).
Mat4 rotation_unitary(const Generator& gen, double theta);

}  // namespace dualbloch
