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

#include <optional>
#include <string_view>

#include "dualbloch/common.hpp"
#include "dualbloch/pauli.hpp"

namespace dualbloch {

/// Normalizes and applies the global-phase gauge: the first amplitude with
/// modulus > EPS_EXACT becomes real and positive. Idempotent bit-for-bit.
/// Throws InvalidArgument on a zero or non-finite vector.
Vec4c canonical(const Vec4c& amps);
Vec2c canonical(const Vec2c& amps);

/// Pure two-qubit state in basis order (uu, ud, du, dd), always stored in
/// canonical form so that equal states compare equal.
class TwoQubitState {
 public:
  /// |uu>.
  TwoQubitState();

  static TwoQubitState from_amplitudes(const Vec4c& amps);
  static TwoQubitState from_amplitudes(Complex uu, Complex ud, Complex du,
                                       Complex dd);

  const Vec4c& amplitudes() const noexcept { return amps_; }
  Complex operator[](int i) const { return amps_[i]; }

  /// Amplitudes as the 2x2 coefficient matrix M(i, j) = <i j|psi>.
  Mat2 coefficients() const;

  friend bool operator==(const TwoQubitState& a, const TwoQubitState& b) {
    return a.amps_ == b.amps_;
  }

 private:
  explicit TwoQubitState(const Vec4c& canonical_amps) : amps_(canonical_amps) {}
  Vec4c amps_;
};

namespace states {
TwoQubitState up_up();
TwoQubitState up_down();
TwoQubitState down_up();
TwoQubitState down_down();
TwoQubitState psi_plus();
TwoQubitState psi_minus();
TwoQubitState phi_plus();
TwoQubitState phi_minus();
/// 0.924|uu> - 0.383|dd>, i.e. cos(pi/8)|uu> - sin(pi/8)|dd>.
TwoQubitState partial_p();

/// Resolves uu, ud, du, dd, psi+, psi-, phi+, phi-, P.
std::optional<TwoQubitState> by_name(std::string_view name);
}  // namespace states

/// Single-qubit pure state whose Bloch vector points along `direction`
/// (normalized internally), in canonical phase.
Vec2c qubit_from_bloch(const Vec3& direction);

/// Tensor product of two single-qubit states (each normalized first).
TwoQubitState product_state(const Vec2c& q1, const Vec2c& q2);

/// Throws NonUnitary if ||U^dagger U - I||_F > EPS_NUM.
TwoQubitState apply(const Mat4& unitary, const TwoQubitState& psi);

bool is_unitary(const Mat4& m, double tol);

/// Single-qubit density matrix.
struct Density2 {
  Mat2 matrix;

  /// Hermitian, unit trace, eigenvalues >= -tol.
  bool is_valid(double tol = EPS_EXACT) const;
};

/// which = 1 traces out qubit 2, which = 2 traces out qubit 1.
Density2 reduced_density(const TwoQubitState& psi, int which);

/// r_k = Tr(rho sigma_k).
Vec3 bloch_vector(const Density2& rho);

/// T(i, j) = <psi| sigma_i (x) sigma_j |psi>, i, j over x, y, z.
Mat3 correlation_matrix(const TwoQubitState& psi);

struct SchmidtForm {
  double alpha = 1.0;
  double beta = 0.0;
  Vec2c a0, a1, b0, b1;

  /// alpha |a0 b0> + beta |a1 b1> (not canonicalized).
  Vec4c reconstruct() const;
};

/// psi = alpha |a0 b0> + beta |a1 b1>, alpha >= beta >= 0. When alpha and
/// beta tie within EPS_NUM the local basis is the computational basis.
SchmidtForm schmidt(const TwoQubitState& psi);

/// |<a|b>|^2.
double fidelity(const TwoQubitState& a, const TwoQubitState& b);
double fidelity(const Vec4c& a, const Vec4c& b);

Vec4c kron(const Vec2c& a, const Vec2c& b);
Mat4 kron(const Mat2& a, const Mat2& b);

/// SO(3) image of a single-qubit unitary: u sigma_k u^dagger =
/// sum_j R(j, k) sigma_j.
Mat3 rotation_of(const Mat2& u);

/// SU(2) element whose rotation_of() is `rotation` (a proper rotation).
/// Of the two lifts +-u, returns the one whose first nonzero entry has
/// positive real part.
Mat2 lift_rotation(const Mat3& rotation);

}  // namespace dualbloch
