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
#include <optional>
#include <vector>

#include "dualbloch/measures.hpp"
#include "dualbloch/state.hpp"

namespace dualbloch {

/// Orthonormal 3x3 frame whose columns are the drawn (absolute) directions
/// of a sphere's body axes x, y, z. det = -1 marks a left-handed frame.
class Frame {
 public:
  Frame() : axes_(Mat3::Identity()) {}
  explicit Frame(const Mat3& axes) : axes_(axes) {}

  const Mat3& axes() const noexcept { return axes_; }
  Vec3 axis(int i) const { return axes_.col(i); }
  double det() const { return axes_.determinant(); }
  bool is_orthonormal(double tol) const;

  Vec3 to_body(const Vec3& absolute) const { return axes_.transpose() * absolute; }

 private:
  Mat3 axes_;
};

struct SphereView {
  Frame frame;
  /// Absolute direction of the state arrow; absent when the layer is
  /// maximally entangled (drawn as a dot at the center).
  std::optional<Vec3> arrow;
};

enum class LayerKind { Separable, Mes };

/// One dual-sphere picture. A separable layer has right-handed frames and
/// equal arrows on both spheres; an MES layer has no arrows, an identity
/// first frame and a left-handed second frame.
struct SceneLayer {
  LayerKind kind = LayerKind::Separable;
  double weight = 1.0;  ///< r for the separable layer, r_tilde for the MES layer
  std::array<SphereView, 2> spheres;
};

/// One layer for separable or maximally entangled states; two layers
/// (separable first, MES second) for partially entangled states.
struct Scene {
  std::vector<SceneLayer> layers;

  const SceneLayer* layer(LayerKind kind) const;
  EntanglementKind classification() const;
  double r() const;
  double r_tilde() const;
};

Scene scene_from_state(const TwoQubitState& psi);

/// Inverse of scene_from_state up to global phase. Throws InvalidScene if
/// the scene breaks its invariants by more than EPS_CLASS.
TwoQubitState state_from_scene(const Scene& scene);

/// Throws InvalidScene describing the first violated invariant.
void validate(const Scene& scene);

/// True iff the two scenes reconstruct to states with fidelity >= 1 - 1e-9.
bool scenes_equivalent(const Scene& a, const Scene& b);

/// Rigidly turns each layer so the first sphere's frame is the identity.
/// Relative geometry, and hence the represented state, is unchanged.
Scene with_fixed_first_frame(const Scene& scene);

/// Smallest rotation R with R * from = to (both normalized internally).
/// Antiparallel inputs rotate by pi about the coordinate axis most
/// perpendicular to `to` (ties x, y, z), projected perpendicular to `to`.
Mat3 minimal_rotation(const Vec3& from, const Vec3& to);

/// Separable layer for |q1> (x) |q2>: first frame identity, both arrows along
/// the Bloch vector of q1, second frame the minimal rotation carrying q2's
/// Bloch vector onto that arrow.
SceneLayer separable_layer(const Vec2c& q1, const Vec2c& q2, double weight);

/// MES layer: second frame is the correlation matrix of `mes`.
SceneLayer mes_layer(const TwoQubitState& mes, double weight);

}  // namespace dualbloch
