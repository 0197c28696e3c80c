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

#include "dualbloch/rules.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace dualbloch {

namespace {

constexpr char kAxisNames[3] = {'x', 'y', 'z'};

double expectation(const TwoQubitState& psi, const Generator& gen) {
  const Vec4c& v = psi.amplitudes();
  return std::real(v.dot(generator_matrix(gen) * v));
}

/// Right-handed quarter turn about body axis `axis`, q = +1 or -1.
Mat3 quarter_turn(int axis, int q) {
  static constexpr int kNext[3][2] = {{1, 2}, {2, 0}, {0, 1}};
  const int j = kNext[axis][0];
  const int k = kNext[axis][1];
  Mat3 r = Mat3::Zero();
  r(axis, axis) = 1;
  r(j, k) = -q;
  r(k, j) = q;
  return r;
}

int sign_of(double x) { return x < 0 ? -1 : 1; }

/// Round to {-1, 0, 1}; throws when an entry is not within tol of one.
double snap(double x, double tol) {
  const double n = std::round(x);
  if (std::abs(x - n) > tol || std::abs(n) > 1) {
    throw NotStabilizer("scene is not axis-aligned");
  }
  return n == 0 ? 0.0 : n;  // drop -0
}

Mat3 snap(const Mat3& m, double tol) {
  Mat3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out(i, j) = snap(m(i, j), tol);
  }
  return out;
}

Vec3 snap(const Vec3& v, double tol) {
  return Vec3(snap(v[0], tol), snap(v[1], tol), snap(v[2], tol));
}

/// Working form of a single-layer stabilizer scene.
struct Drawn {
  LayerKind kind;
  Mat3 f1, f2;
  Vec3 arrow = Vec3::Zero();

  Scene to_scene() const {
    // Keep sphere 1 in the identity frame: relabel both spheres by F1^T.
    const Mat3 g = f1.transpose();
    SceneLayer layer;
    layer.kind = kind;
    layer.weight = 1.0;
    layer.spheres[0].frame = Frame();
    layer.spheres[1].frame = Frame(g * f2);
    if (kind == LayerKind::Separable) {
      layer.spheres[0].arrow = g * arrow;
      layer.spheres[1].arrow = g * arrow;
    }
    Scene s;
    s.layers.push_back(layer);
    return s;
  }
};

Drawn read_scene(const Scene& scene) {
  validate(scene);
  if (scene.layers.size() != 1) {
    throw NotStabilizer("partially entangled scenes are outside the stabilizer set");
  }
  const SceneLayer& layer = scene.layers.front();
  Drawn d{layer.kind, snap(layer.spheres[0].frame.axes(), EPS_NUM),
          snap(layer.spheres[1].frame.axes(), EPS_NUM)};
  if (layer.kind == LayerKind::Separable) {
    d.arrow = snap(*layer.spheres[0].arrow, EPS_NUM);
    if (d.arrow.cwiseAbs().sum() != 1) throw NotStabilizer("arrow is not along an axis");
  }
  return d;
}

/// The unique axis-aligned right-handed frame M with M r2 = A,
/// M e_b perpendicular to u and u x (s M e_b) = -A.
Mat3 entangling_frame(const Vec3& r2, const Vec3& arrow, const Vec3& u, int b, int s) {
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<Mat3> found;
  for (const auto& perm : kPerms) {
    for (int signs = 0; signs < 8; ++signs) {
      Mat3 m = Mat3::Zero();
      for (int c = 0; c < 3; ++c) m(perm[c], c) = (signs >> c & 1) ? -1 : 1;
      if (m.determinant() < 0) continue;
      const Vec3 eb = s * m.col(b);
      if ((m * r2 - arrow).cwiseAbs().maxCoeff() > EPS_NUM) continue;
      if (std::abs(eb.dot(u)) > EPS_NUM) continue;
      if ((u.cross(eb) + arrow).cwiseAbs().maxCoeff() > EPS_NUM) continue;
      found.push_back(m);
    }
  }
  if (found.size() != 1) {
    throw UnsupportedConfiguration(
        fmt::format("S-E rule found {} candidate frames, expected exactly one", found.size()));
  }
  return found.front();
}

}  // namespace

std::string AxisRef::name() const {
  return fmt::format("{}{}{}", sign < 0 ? "-" : "", kAxisNames[axis], sphere);
}

std::string Plane::name() const { return first.name() + "^" + second.name(); }

Plane plane_of(const Generator& gen) {
  if (gen.is_local()) {
    const bool on_first = gen.second() == Pauli::I;
    const int sphere = on_first ? 1 : 2;
    const int a = axis_index(on_first ? gen.first() : gen.second());
    return {{sphere, (a + 1) % 3, 1}, {sphere, (a + 2) % 3, 1}};
  }
  return {{1, axis_index(gen.first()), 1}, {2, axis_index(gen.second()), 1}};
}

Plane signed_plane(const Generator& gen, int direction, SignOperand carrier) {
  if (direction != 1 && direction != -1) throw InvalidArgument("direction must be +1 or -1");
  Plane p = plane_of(gen);
  (carrier == SignOperand::First ? p.first : p.second).sign = direction;
  return p;
}

std::string_view to_string(PlaneClass c) {
  switch (c) {
    case PlaneClass::Eigen:
      return "eigen";
    case PlaneClass::WithinSeparable:
      return "within-separable";
    case PlaneClass::WithinMes:
      return "within-mes";
    case PlaneClass::ToSeparable:
      return "to-separable";
    case PlaneClass::ToMes:
      return "to-mes";
  }
  return "?";
}

std::string_view to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::Eigen:
      return "eigen";
    case RuleKind::Local:
      return "local";
    case RuleKind::SeparableToSeparable:
      return "S-S";
    case RuleKind::EntangledToSeparable:
      return "E-S";
    case RuleKind::SeparableToEntangled:
      return "S-E";
  }
  return "?";
}

bool is_stabilizer_state(const TwoQubitState& psi) {
  if (classify(psi).kind == EntanglementKind::Partial) return false;
  int count = 0;
  for (const auto& g : all_generators()) {
    if (std::abs(std::abs(expectation(psi, g)) - 1) <= EPS_NUM) ++count;
  }
  return count == 3;
}

std::vector<Generator> eigenplanes(const TwoQubitState& psi) {
  if (classify(psi).kind == EntanglementKind::Partial) {
    throw NotStabilizer("partially entangled states are not stabilizer states");
  }
  std::vector<Generator> out;
  for (const auto& g : all_generators()) {
    if (std::abs(std::abs(expectation(psi, g)) - 1) <= EPS_NUM) out.push_back(g);
  }
  if (out.size() != 3) {
    throw NotStabilizer(fmt::format("state has {} eigenplanes, not 3", out.size()));
  }
  return out;
}

PlaneClass classify_plane(const TwoQubitState& psi, const Generator& gen) {
  const auto eigen = eigenplanes(psi);
  if (std::find(eigen.begin(), eigen.end(), gen) != eigen.end()) return PlaneClass::Eigen;
  const bool from_mes = classify(psi).kind == EntanglementKind::Maximal;
  const auto out = dualbloch::apply(rotation_unitary(gen, kPi / 2), psi);
  const auto to = classify(out).kind;
  if (to == EntanglementKind::Partial) {
    throw NotStabilizer("quarter turn left the stabilizer set");
  }
  const bool to_mes = to == EntanglementKind::Maximal;
  if (from_mes) return to_mes ? PlaneClass::WithinMes : PlaneClass::ToSeparable;
  return to_mes ? PlaneClass::ToMes : PlaneClass::WithinSeparable;
}

PlaneCensus plane_census(const TwoQubitState& psi) {
  PlaneCensus census{{PlaneClass::Eigen, 0},       {PlaneClass::WithinSeparable, 0},
                     {PlaneClass::WithinMes, 0},   {PlaneClass::ToSeparable, 0},
                     {PlaneClass::ToMes, 0}};
  for (const auto& g : all_generators()) ++census[classify_plane(psi, g)];
  return census;
}

bool is_axis_aligned(const Scene& scene, double tol) {
  if (scene.layers.size() != 1) return false;
  const auto entries_ok = [tol](const auto& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      const double x = m.data()[i];
      if (std::abs(x - std::round(x)) > tol || std::abs(std::round(x)) > 1) return false;
    }
    return true;
  };
  for (const auto& view : scene.layers.front().spheres) {
    if (!entries_ok(view.frame.axes())) return false;
    if (view.arrow && (!entries_ok(*view.arrow) ||
                       std::abs(view.arrow->cwiseAbs().sum() - 1) > tol)) {
      return false;
    }
  }
  return true;
}

RuleResult apply_rule_traced(const Scene& scene, const Generator& gen, int direction,
                             SignOperand carrier) {
  if (direction != 1 && direction != -1) throw InvalidArgument("direction must be +1 or -1");
  Drawn d = read_scene(scene);
  const bool separable = d.kind == LayerKind::Separable;
  const int a = gen.first() == Pauli::I ? -1 : axis_index(gen.first());
  const int b = gen.second() == Pauli::I ? -1 : axis_index(gen.second());

  // Eigen check: the expectation value of the generator read off the drawing.
  double ev = 0;
  if (separable) {
    const Vec3 r1 = d.f1.transpose() * d.arrow;
    const Vec3 r2 = d.f2.transpose() * d.arrow;
    ev = (a < 0 ? 1.0 : r1[a]) * (b < 0 ? 1.0 : r2[b]);
  } else if (gen.is_double_pauli()) {
    ev = (d.f1.transpose() * d.f2)(a, b);
  }
  if (std::abs(std::abs(ev) - 1) <= EPS_NUM) return {d.to_scene(), RuleKind::Eigen};

  if (a < 0) {
    d.f2 = d.f2 * quarter_turn(b, direction);
    return {d.to_scene(), RuleKind::Local};
  }
  if (b < 0) {
    d.f1 = d.f1 * quarter_turn(a, direction);
    return {d.to_scene(), RuleKind::Local};
  }

  // Signed wedge operands; their signs multiply to the direction.
  const int s1 = carrier == SignOperand::First ? direction : 1;
  const int s2 = carrier == SignOperand::Second ? direction : 1;
  const Vec3 u = s1 * d.f1.col(a);
  const Vec3 v = s2 * d.f2.col(b);

  if (separable) {
    const double ua = u.dot(d.arrow);
    const double va = v.dot(d.arrow);
    if (std::abs(std::abs(ua) - 1) <= EPS_NUM) {
      // Sphere 1's axis lies on the arrow: sphere 2 turns in its own plane.
      d.f2 = d.f2 * quarter_turn(b, sign_of(ua) * s2);
      return {d.to_scene(), RuleKind::SeparableToSeparable};
    }
    if (std::abs(std::abs(va) - 1) <= EPS_NUM) {
      d.f1 = d.f1 * quarter_turn(a, sign_of(va) * s1);
      return {d.to_scene(), RuleKind::SeparableToSeparable};
    }
    // S-E: arrows withdraw; sphere 2 is redrawn so that the oriented plane
    // condition holds, then its wedge axis is inverted.
    const Vec3 r2 = d.f2.transpose() * d.arrow;
    Mat3 m = entangling_frame(r2, d.arrow, u, b, s2);
    m.col(b) *= -1;
    d.kind = LayerKind::Mes;
    d.f2 = m;
    d.arrow = Vec3::Zero();
    return {d.to_scene(), RuleKind::SeparableToEntangled};
  }

  // E-S: arrows appear opposite the normal of the oriented plane u ^ v.
  d.arrow = -u.cross(v);
  d.f2.col(b) *= -1;
  d.kind = LayerKind::Separable;
  return {d.to_scene(), RuleKind::EntangledToSeparable};
}

Scene apply_rule(const Scene& scene, const Generator& gen, int direction, SignOperand carrier) {
  return apply_rule_traced(scene, gen, direction, carrier).scene;
}

}  // namespace dualbloch
