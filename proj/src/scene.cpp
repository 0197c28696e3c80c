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

#include "dualbloch/scene.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace dualbloch {

namespace {

constexpr double kSceneTol = EPS_CLASS;

Vec3 bloch_of_qubit(const Vec2c& q) {
  const Complex c = std::conj(q[0]) * q[1];
  return Vec3(2 * c.real(), 2 * c.imag(), std::norm(q[0]) - std::norm(q[1]));
}

bool finite(const Mat3& m) { return m.allFinite(); }

void check_frame(const Frame& f, const char* where) {
  if (!finite(f.axes())) throw InvalidScene(fmt::format("{}: frame is not finite", where));
  if (!f.is_orthonormal(kSceneTol)) {
    throw InvalidScene(fmt::format("{}: frame columns are not orthonormal", where));
  }
  if (std::abs(std::abs(f.det()) - 1) > kSceneTol) {
    throw InvalidScene(fmt::format("{}: frame determinant {} is not +-1", where, f.det()));
  }
}

/// Nearest orthogonal matrix (polar factor).
Mat3 orthogonalize(const Mat3& m) {
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

/// The MES whose correlation matrix is first^T * second. Places the SU(2)
/// lift on qubit 2: for psi = (I (x) u) Phi+, T = D R(u)^T with
/// D = diag(1, -1, 1), so R(u) = T^T D.
Vec4c mes_from_frames(const Frame& first, const Frame& second) {
  const Mat3 t = orthogonalize(first.axes().transpose() * second.axes());
  const Mat3 d = Eigen::Vector3d(1, -1, 1).asDiagonal();
  const Mat2 u = lift_rotation(t.transpose() * d);
  const Vec4c phi_plus = Vec4c(1, 0, 0, 1) / std::sqrt(2.0);
  return kron(Mat2(Mat2::Identity()), u) * phi_plus;
}

Vec4c product_from_view(const SceneLayer& layer) {
  const Vec2c q1 = qubit_from_bloch(layer.spheres[0].frame.to_body(*layer.spheres[0].arrow));
  const Vec2c q2 = qubit_from_bloch(layer.spheres[1].frame.to_body(*layer.spheres[1].arrow));
  return kron(q1, q2);
}

void validate_layer(const SceneLayer& layer, int index) {
  const std::string where = fmt::format("layer {}", index);
  if (!std::isfinite(layer.weight) || layer.weight < -kSceneTol ||
      layer.weight > 1 + kSceneTol) {
    throw InvalidScene(where + ": weight outside [0, 1]");
  }
  for (int s = 0; s < 2; ++s) {
    check_frame(layer.spheres[s].frame, (where + fmt::format(" sphere {}", s + 1)).c_str());
  }
  if (layer.kind == LayerKind::Separable) {
    for (int s = 0; s < 2; ++s) {
      const auto& view = layer.spheres[s];
      if (!view.arrow) throw InvalidScene(where + ": separable layer needs both arrows");
      if (!view.arrow->allFinite()) throw InvalidScene(where + ": arrow is not finite");
      const double n = view.arrow->norm();
      if (n <= kSceneTol || n > 1 + EPS_NUM) {
        throw InvalidScene(where + ": arrow length must be in (0, 1]");
      }
      if (view.frame.det() < 0) {
        throw InvalidScene(where + ": separable layer frames must be right-handed");
      }
    }
    if ((*layer.spheres[0].arrow - *layer.spheres[1].arrow).norm() > kSceneTol) {
      throw InvalidScene(where + ": separable arrows must point the same absolute way");
    }
  } else {
    if (layer.spheres[0].arrow || layer.spheres[1].arrow) {
      throw InvalidScene(where + ": MES layer carries no arrows");
    }
    if ((layer.spheres[0].frame.axes() - Mat3::Identity()).cwiseAbs().maxCoeff() >
        kSceneTol) {
      throw InvalidScene(where + ": MES layer first frame must be the identity");
    }
    if (layer.spheres[1].frame.det() > 0) {
      throw InvalidScene(where + ": MES layer second frame must be left-handed");
    }
  }
}

}  // namespace

bool Frame::is_orthonormal(double tol) const {
  return (axes_.transpose() * axes_ - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol;
}

const SceneLayer* Scene::layer(LayerKind kind) const {
  for (const auto& l : layers) {
    if (l.kind == kind) return &l;
  }
  return nullptr;
}

EntanglementKind Scene::classification() const {
  if (layers.size() == 2) return EntanglementKind::Partial;
  if (!layers.empty() && layers.front().kind == LayerKind::Mes) {
    return EntanglementKind::Maximal;
  }
  return EntanglementKind::Separable;
}

double Scene::r() const {
  const SceneLayer* l = layer(LayerKind::Separable);
  return l ? l->weight : 0.0;
}

double Scene::r_tilde() const {
  const SceneLayer* l = layer(LayerKind::Mes);
  return l ? l->weight : 0.0;
}

Mat3 minimal_rotation(const Vec3& from, const Vec3& to) {
  const Vec3 a = from.normalized();
  const Vec3 b = to.normalized();
  const double c = a.dot(b);
  if (c < -1 + EPS_NUM) {
    int best = 0;
    for (int i = 1; i < 3; ++i) {
      if (std::abs(b[i]) < std::abs(b[best])) best = i;
    }
    Vec3 axis = Vec3::Unit(best);
    axis = (axis - axis.dot(b) * b).normalized();
    const Mat3 half_turn = 2 * axis * axis.transpose() - Mat3::Identity();
    // Finish with the small residual rotation so that R * from == to.
    return minimal_rotation(half_turn * a, b) * half_turn;
  }
  const Vec3 v = a.cross(b);
  Mat3 k;
  k << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
  return Mat3::Identity() + k + k * k / (1 + c);
}

SceneLayer separable_layer(const Vec2c& q1, const Vec2c& q2, double weight) {
  const Vec3 arrow = bloch_of_qubit(canonical(q1));
  const Vec3 body2 = bloch_of_qubit(canonical(q2));
  SceneLayer layer;
  layer.kind = LayerKind::Separable;
  layer.weight = weight;
  layer.spheres[0] = {Frame(), arrow};
  layer.spheres[1] = {Frame(minimal_rotation(body2, arrow)), arrow};
  return layer;
}

SceneLayer mes_layer(const TwoQubitState& mes, double weight) {
  SceneLayer layer;
  layer.kind = LayerKind::Mes;
  layer.weight = weight;
  layer.spheres[0] = {Frame(), std::nullopt};
  layer.spheres[1] = {Frame(correlation_matrix(mes)), std::nullopt};
  return layer;
}

Scene scene_from_state(const TwoQubitState& psi) {
  const Classification c = classify(psi);
  Scene scene;
  switch (c.kind) {
    case EntanglementKind::Separable: {
      const Vec3 arrow = bloch_vector(reduced_density(psi, 1));
      const Vec3 body2 = bloch_vector(reduced_density(psi, 2));
      SceneLayer layer;
      layer.kind = LayerKind::Separable;
      layer.weight = 1.0;
      layer.spheres[0] = {Frame(), arrow};
      layer.spheres[1] = {Frame(minimal_rotation(body2, arrow)), arrow};
      scene.layers.push_back(layer);
      break;
    }
    case EntanglementKind::Maximal:
      scene.layers.push_back(mes_layer(psi, 1.0));
      break;
    case EntanglementKind::Partial: {
      const SchmidtForm s = schmidt(psi);
      const auto mes = TwoQubitState::from_amplitudes(kron(s.a0, s.b0) + kron(s.a1, s.b1));
      scene.layers.push_back(separable_layer(s.a0, s.b0, c.r));
      scene.layers.push_back(mes_layer(mes, c.r_tilde));
      break;
    }
  }
  return scene;
}

void validate(const Scene& scene) {
  if (scene.layers.empty() || scene.layers.size() > 2) {
    throw InvalidScene("a scene has one or two layers");
  }
  if (scene.layers.size() == 2 && (scene.layers[0].kind != LayerKind::Separable ||
                                   scene.layers[1].kind != LayerKind::Mes)) {
    throw InvalidScene("a two-layer scene is a separable layer followed by an MES layer");
  }
  double total = 0;
  for (std::size_t i = 0; i < scene.layers.size(); ++i) {
    validate_layer(scene.layers[i], static_cast<int>(i));
    total += scene.layers[i].weight * scene.layers[i].weight;
  }
  if (std::abs(total - 1) > kSceneTol) {
    throw InvalidScene(fmt::format("squared layer weights sum to {}, not 1", total));
  }
}

TwoQubitState state_from_scene(const Scene& scene) {
  validate(scene);
  if (scene.layers.size() == 1) {
    const SceneLayer& layer = scene.layers.front();
    if (layer.kind == LayerKind::Separable) {
      return TwoQubitState::from_amplitudes(product_from_view(layer));
    }
    return TwoQubitState::from_amplitudes(
        mes_from_frames(layer.spheres[0].frame, layer.spheres[1].frame));
  }
  const SceneLayer& sep = scene.layers[0];
  const SceneLayer& ent = scene.layers[1];
  const Vec4c p = product_from_view(sep);
  const Vec4c m = mes_from_frames(ent.spheres[0].frame, ent.spheres[1].frame);
  const Complex overlap = p.dot(m);
  if (std::abs(std::norm(overlap) - 0.5) > kSceneTol) {
    throw InvalidScene("separable and MES layers do not share a Schmidt basis");
  }
  const Complex phase = overlap / std::abs(overlap);
  const double r = std::clamp(sep.weight, 0.0, 1.0);
  const double alpha = std::sqrt((1 + r) / 2);
  const double beta = std::sqrt((1 - r) / 2);
  // m = e^{i g} (|a0 b0> + |a1 b1>) / sqrt(2) with p = |a0 b0> up to phase.
  const Vec4c psi = (alpha - beta) * p + (beta * std::sqrt(2.0) * std::conj(phase)) * m;
  return TwoQubitState::from_amplitudes(psi);
}

bool scenes_equivalent(const Scene& a, const Scene& b) {
  return fidelity(state_from_scene(a), state_from_scene(b)) >= 1 - EPS_NUM;
}

Scene with_fixed_first_frame(const Scene& scene) {
  Scene out = scene;
  for (auto& layer : out.layers) {
    const Mat3 g = layer.spheres[0].frame.axes().transpose();
    for (auto& view : layer.spheres) {
      view.frame = Frame(g * view.frame.axes());
      if (view.arrow) view.arrow = g * *view.arrow;
    }
    layer.spheres[0].frame = Frame();
  }
  return out;
}

}  // namespace dualbloch
