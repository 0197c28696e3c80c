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

// Seeded samplers for property checks. A given seed reproduces the same
// samples with the same standard library.

#include <cmath>
#include <random>

#include "dualbloch/state.hpp"

namespace dualbloch::sampling {

using Rng = std::mt19937_64;

/// Haar-random pure state (normalized complex Gaussian vector).
inline TwoQubitState random_state(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec4c v;
  for (int i = 0; i < 4; ++i) v[i] = Complex(n(rng), n(rng));
  return TwoQubitState::from_amplitudes(v);
}

/// Haar-random element of SU(2) from a uniformly random unit quaternion.
inline Mat2 random_su2(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  double q[4];
  double norm = 0;
  for (double& c : q) {
    c = n(rng);
    norm += c * c;
  }
  norm = std::sqrt(norm);
  for (double& c : q) c /= norm;
  Mat2 u;
  u << Complex(q[0], q[3]), Complex(q[2], q[1]), Complex(-q[2], q[1]), Complex(q[0], -q[3]);
  return u;
}

inline Vec2c random_qubit(Rng& rng) { return random_su2(rng).col(0); }

inline TwoQubitState random_product(Rng& rng) {
  return product_state(random_qubit(rng), random_qubit(rng));
}

/// Random local unitaries applied to Phi+.
inline TwoQubitState random_mes(Rng& rng) {
  const Mat4 u = kron(random_su2(rng), random_su2(rng));
  return TwoQubitState::from_amplitudes(u * states::phi_plus().amplitudes());
}

/// cos(t)|a0 b0> + sin(t)|a1 b1> with t uniform in (0, pi/4) and random
/// local bases: strictly partially entangled almost surely.
inline TwoQubitState random_partial(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.05, 0.75);
  const double t = angle(rng);
  const Mat4 u = kron(random_su2(rng), random_su2(rng));
  const Vec4c v(std::cos(t), 0, 0, std::sin(t));
  return TwoQubitState::from_amplitudes(u * v);
}

}  // namespace dualbloch::sampling
