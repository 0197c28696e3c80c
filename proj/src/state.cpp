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

#include "dualbloch/state.hpp"

#include <algorithm>
#include <cmath>

namespace dualbloch {

namespace {

template <class V>
int leading_index(const V& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > EPS_EXACT) return i;
  }
  return -1;
}

template <class V>
V canonical_impl(const V& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) {
      throw InvalidArgument("state amplitudes must be finite");
    }
  }
  const double n2 = v.squaredNorm();
  if (!(n2 > EPS_EXACT * EPS_EXACT)) {
    throw InvalidArgument("state vector has zero norm");
  }
  int lead = leading_index(v);
  if (lead >= 0 && std::abs(n2 - 1.0) <= 1e-14 && v[lead].imag() == 0.0 &&
      v[lead].real() > 0.0) {
    return v;  // already in gauge; keeps canonical() idempotent bit-for-bit
  }
  V w = v / std::sqrt(n2);
  lead = leading_index(w);
  if (lead < 0) throw InvalidArgument("state vector has zero norm");
  const Complex phase = std::conj(w[lead]) / std::abs(w[lead]);
  w *= phase;
  w[lead] = Complex(w[lead].real(), 0.0);
  return w;
}

Vec2c orthogonal_complement(const Vec2c& b) {
  return Vec2c(-std::conj(b[1]), std::conj(b[0]));
}

}  // namespace

Vec4c canonical(const Vec4c& amps) { return canonical_impl(amps); }
Vec2c canonical(const Vec2c& amps) { return canonical_impl(amps); }

TwoQubitState::TwoQubitState() : amps_(1, 0, 0, 0) {}

TwoQubitState TwoQubitState::from_amplitudes(const Vec4c& amps) {
  return TwoQubitState(canonical(amps));
}

TwoQubitState TwoQubitState::from_amplitudes(Complex uu, Complex ud, Complex du,
                                             Complex dd) {
  return from_amplitudes(Vec4c(uu, ud, du, dd));
}

Mat2 TwoQubitState::coefficients() const {
  Mat2 m;
  m << amps_[0], amps_[1], amps_[2], amps_[3];
  return m;
}

namespace states {

TwoQubitState up_up() { return TwoQubitState::from_amplitudes(1, 0, 0, 0); }
TwoQubitState up_down() { return TwoQubitState::from_amplitudes(0, 1, 0, 0); }
TwoQubitState down_up() { return TwoQubitState::from_amplitudes(0, 0, 1, 0); }
TwoQubitState down_down() { return TwoQubitState::from_amplitudes(0, 0, 0, 1); }
TwoQubitState psi_plus() { return TwoQubitState::from_amplitudes(0, 1, 1, 0); }
TwoQubitState psi_minus() { return TwoQubitState::from_amplitudes(0, 1, -1, 0); }
TwoQubitState phi_plus() { return TwoQubitState::from_amplitudes(1, 0, 0, 1); }
TwoQubitState phi_minus() { return TwoQubitState::from_amplitudes(1, 0, 0, -1); }

TwoQubitState partial_p() {
  return TwoQubitState::from_amplitudes(std::cos(kPi / 8), 0, 0, -std::sin(kPi / 8));
}

std::optional<TwoQubitState> by_name(std::string_view name) {
  if (name == "uu") return up_up();
  if (name == "ud") return up_down();
  if (name == "du") return down_up();
  if (name == "dd") return down_down();
  if (name == "psi+") return psi_plus();
  if (name == "psi-") return psi_minus();
  if (name == "phi+") return phi_plus();
  if (name == "phi-") return phi_minus();
  if (name == "P") return partial_p();
  return std::nullopt;
}

}  // namespace states

Vec2c qubit_from_bloch(const Vec3& direction) {
  const double n = direction.norm();
  if (!(n > EPS_EXACT)) throw InvalidArgument("Bloch direction has zero length");
  const Vec3 d = direction / n;
  Vec2c q;
  // Pick the branch that stays away from the 0/0 at the opposite pole.
  if (d.z() >= 0) {
    q << Complex(1 + d.z(), 0), Complex(d.x(), d.y());
  } else {
    q << Complex(d.x(), -d.y()), Complex(1 - d.z(), 0);
  }
  return canonical(q);
}

Vec4c kron(const Vec2c& a, const Vec2c& b) {
  return Vec4c(a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]);
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return m;
}

TwoQubitState product_state(const Vec2c& q1, const Vec2c& q2) {
  return TwoQubitState::from_amplitudes(kron(canonical(q1), canonical(q2)));
}

bool is_unitary(const Mat4& m, double tol) {
  return (m.adjoint() * m - Mat4::Identity()).norm() <= tol;
}

TwoQubitState apply(const Mat4& unitary, const TwoQubitState& psi) {
  if (!is_unitary(unitary, EPS_NUM)) {
    throw NonUnitary("operator is not unitary within 1e-9");
  }
  return TwoQubitState::from_amplitudes(unitary * psi.amplitudes());
}

bool Density2::is_valid(double tol) const {
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(matrix.trace() - Complex(1, 0)) > tol) return false;
  // 2x2 Hermitian: eigenvalues are (1 +- |r|)/2 given unit trace.
  const double det = (matrix(0, 0) * matrix(1, 1) - matrix(0, 1) * matrix(1, 0)).real();
  const double tr = matrix.trace().real();
  const double disc = std::max(0.0, tr * tr / 4 - det);
  return tr / 2 - std::sqrt(disc) >= -tol;
}

Density2 reduced_density(const TwoQubitState& psi, int which) {
  const Mat2 m = psi.coefficients();
  if (which == 1) return {m * m.adjoint()};
  if (which == 2) return {m.transpose() * m.conjugate()};
  throw InvalidArgument("reduced_density: which must be 1 or 2");
}

namespace {
// Entries within EPS_EXACT of -1, 0 or 1 are rounded so that axis-aligned
// states produce exact frames and arrows.
double snap_unit(double x) {
  const double n = std::round(x);
  if (std::abs(n) <= 1 && std::abs(x - n) <= EPS_EXACT) return n == 0 ? 0.0 : n;
  return x;
}
}  // namespace

Vec3 bloch_vector(const Density2& rho) {
  const Mat2& m = rho.matrix;
  return Vec3(snap_unit(2 * m(1, 0).real()), snap_unit(2 * m(1, 0).imag()),
              snap_unit((m(0, 0) - m(1, 1)).real()));
}

Mat3 correlation_matrix(const TwoQubitState& psi) {
  static const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  const Vec4c& v = psi.amplitudes();
  Mat3 t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Mat4 g = kron(pauli_matrix(axes[i]), pauli_matrix(axes[j]));
      t(i, j) = snap_unit(v.dot(g * v).real());
    }
  }
  return t;
}

Vec4c SchmidtForm::reconstruct() const {
  return alpha * kron(a0, b0) + beta * kron(a1, b1);
}

SchmidtForm schmidt(const TwoQubitState& psi) {
  const Mat2 m = psi.coefficients();
  const Vec3 r = bloch_vector(reduced_density(psi, 1));
  const double radius = std::min(1.0, r.norm());
  const bool tie =
      std::sqrt((1 + radius) / 2) - std::sqrt((1 - radius) / 2) <= EPS_NUM;

  SchmidtForm out;
  if (tie) {
    out.a0 = Vec2c(1, 0);
    out.a1 = Vec2c(0, 1);
  } else {
    out.a0 = qubit_from_bloch(r);
    out.a1 = qubit_from_bloch(-r);
  }
  // b_k = M^T conj(a_k), so that psi = sum_k a_k (x) b_k exactly.
  Vec2c c0 = m.transpose() * out.a0.conjugate();
  Vec2c c1 = m.transpose() * out.a1.conjugate();
  if (tie) {
    if (c0.norm() < c1.norm()) {
      std::swap(out.a0, out.a1);
      std::swap(c0, c1);
    }
    out.alpha = c0.norm();
    out.beta = c1.norm();
    out.b0 = c0 / out.alpha;
    out.b1 = c1 / out.beta;
    return out;
  }
  out.alpha = c0.norm();
  out.beta = c1.norm();
  out.b0 = c0 / out.alpha;
  const Vec2c perp = orthogonal_complement(out.b0);
  const Complex overlap = perp.dot(c1);
  const Complex phase =
      std::abs(overlap) > EPS_EXACT * EPS_EXACT ? overlap / std::abs(overlap) : Complex(1, 0);
  out.b1 = phase * perp;
  return out;
}

double fidelity(const Vec4c& a, const Vec4c& b) { return std::norm(a.dot(b)); }

double fidelity(const TwoQubitState& a, const TwoQubitState& b) {
  return fidelity(a.amplitudes(), b.amplitudes());
}

Mat3 rotation_of(const Mat2& u) {
  static const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  Mat3 r;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const Mat2 conj_k = u * pauli_matrix(axes[k]) * u.adjoint();
      r(j, k) = 0.5 * (pauli_matrix(axes[j]) * conj_k).trace().real();
    }
  }
  return r;
}

Mat2 lift_rotation(const Mat3& rot) {
  // Quaternion extraction from the largest of 4w^2, 4x^2, 4y^2, 4z^2.
  const double t = rot.trace();
  const double c[4] = {1 + t, 1 + rot(0, 0) - rot(1, 1) - rot(2, 2),
                       1 - rot(0, 0) + rot(1, 1) - rot(2, 2),
                       1 - rot(0, 0) - rot(1, 1) + rot(2, 2)};
  const int i = static_cast<int>(std::max_element(c, c + 4) - c);
  const double s = 2 * std::sqrt(c[i]);
  double w, x, y, z;
  switch (i) {
    case 0:
      w = s / 4;
      x = (rot(2, 1) - rot(1, 2)) / s;
      y = (rot(0, 2) - rot(2, 0)) / s;
      z = (rot(1, 0) - rot(0, 1)) / s;
      break;
    case 1:
      w = (rot(2, 1) - rot(1, 2)) / s;
      x = s / 4;
      y = (rot(0, 1) + rot(1, 0)) / s;
      z = (rot(0, 2) + rot(2, 0)) / s;
      break;
    case 2:
      w = (rot(0, 2) - rot(2, 0)) / s;
      x = (rot(0, 1) + rot(1, 0)) / s;
      y = s / 4;
      z = (rot(1, 2) + rot(2, 1)) / s;
      break;
    default:
      w = (rot(1, 0) - rot(0, 1)) / s;
      x = (rot(0, 2) + rot(2, 0)) / s;
      y = (rot(1, 2) + rot(2, 1)) / s;
      z = s / 4;
      break;
  }
  // exp(-i theta/2 n.sigma) = w I - i (x X + y Y + z Z)
  Mat2 u = w * pauli_matrix(Pauli::I) -
           kI * (x * pauli_matrix(Pauli::X) + y * pauli_matrix(Pauli::Y) +
                 z * pauli_matrix(Pauli::Z));
  for (int k = 0; k < 4; ++k) {
    const Complex e = u(k / 2, k % 2);
    if (std::abs(e.real()) > EPS_EXACT) {
      if (e.real() < 0) u = -u;
      break;
    }
    if (std::abs(e.imag()) > EPS_EXACT) {
      if (e.imag() < 0) u = -u;
      break;
    }
  }
  return u;
}

}  // namespace dualbloch
