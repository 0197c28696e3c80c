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

#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Geometry>

#include "dualbloch/random.hpp"
#include "dualbloch/scene.hpp"
#include "dualbloch/text_format.hpp"
#include "support/helpers.hpp"

using namespace dualbloch;
using Catch::Matchers::WithinAbs;
using testing_support::to_oracle;

namespace {
Mat3 rot_z(double a) { return Eigen::AngleAxisd(a, Vec3::UnitZ()).toRotationMatrix(); }
}  // namespace

TEST_CASE("scenes of named states", "[scene]") {
  SECTION("psi- inverts every axis") {
    const Scene s = scene_from_state(states::psi_minus());
    REQUIRE(s.layers.size() == 1);
    CHECK(s.layers[0].kind == LayerKind::Mes);
    CHECK(s.layers[0].spheres[0].frame.axes() == Mat3::Identity());
    CHECK(s.layers[0].spheres[1].frame.axes() == -Mat3::Identity());
    CHECK_FALSE(s.layers[0].spheres[0].arrow.has_value());
    CHECK(s.classification() == EntanglementKind::Maximal);
    CHECK(s.r() == 0.0);
    CHECK(s.r_tilde() == 1.0);
  }
  SECTION("uu has two up arrows") {
    const Scene s = scene_from_state(states::up_up());
    REQUIRE(s.layers.size() == 1);
    CHECK(s.layers[0].kind == LayerKind::Separable);
    CHECK(*s.layers[0].spheres[0].arrow == Vec3(0, 0, 1));
    CHECK(*s.layers[0].spheres[1].arrow == Vec3(0, 0, 1));
    CHECK(s.layers[0].spheres[1].frame.axes() == Mat3::Identity());
  }
  SECTION("ud flips the second frame so both arrows point up") {
    const Scene s = scene_from_state(states::up_down());
    const auto& view = s.layers[0].spheres[1];
    CHECK((*view.arrow - Vec3(0, 0, 1)).norm() < EPS_EXACT);
    CHECK((view.frame.to_body(*view.arrow) - Vec3(0, 0, -1)).norm() < EPS_EXACT);
    CHECK_THAT(view.frame.det(), WithinAbs(1, EPS_EXACT));
  }
  SECTION("P has nested layers with a partially inverted MES frame") {
    const Scene s = scene_from_state(states::partial_p());
    REQUIRE(s.layers.size() == 2);
    CHECK(s.layers[0].kind == LayerKind::Separable);
    CHECK(s.layers[1].kind == LayerKind::Mes);
    CHECK_THAT(s.layers[0].weight, WithinAbs(0.707, 1e-3));
    CHECK_THAT(s.layers[1].weight, WithinAbs(0.707, 1e-3));
    const Mat3 expected = Vec3(-1, 1, 1).asDiagonal();
    CHECK((s.layers[1].spheres[1].frame.axes() - expected).cwiseAbs().maxCoeff() < EPS_NUM);
    CHECK(s.classification() == EntanglementKind::Partial);
  }
}

TEST_CASE("MES frames are left-handed correlation matrices", "[scene]") {
  sampling::Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const auto psi = sampling::random_mes(rng);
    const Scene s = scene_from_state(psi);
    REQUIRE(s.layers.size() == 1);
    const auto t = to_oracle(s.layers[0].spheres[1].frame.axes());
    const auto ref = oracle::correlation(to_oracle(psi));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK_THAT(t[a][b], WithinAbs(ref[a][b], EPS_NUM));
    CHECK(oracle::orthogonality_defect(t) < EPS_NUM);
    CHECK_THAT(oracle::det3(t), WithinAbs(-1, EPS_NUM));
  }
}

TEST_CASE("separable scenes share the absolute arrow", "[scene]") {
  sampling::Rng rng(42);
  for (int i = 0; i < 300; ++i) {
    const auto psi = sampling::random_product(rng);
    const Scene s = scene_from_state(psi);
    REQUIRE(s.layers.size() == 1);
    const auto& v1 = s.layers[0].spheres[0];
    const auto& v2 = s.layers[0].spheres[1];
    CHECK((*v1.arrow - *v2.arrow).norm() < EPS_NUM);
    // Body coordinates on the second sphere are qubit 2's Bloch vector.
    const auto r2 = oracle::bloch(oracle::rho2(to_oracle(psi)));
    const Vec3 body = v2.frame.to_body(*v2.arrow);
    for (int k = 0; k < 3; ++k) CHECK_THAT(body[k], WithinAbs(r2[k], EPS_NUM));
    CHECK(v2.frame.is_orthonormal(EPS_NUM));
    CHECK_THAT(v2.frame.det(), WithinAbs(1, EPS_NUM));
  }
}

TEST_CASE("scene roundtrip", "[scene]") {
  for (const char* name : {"uu", "ud", "du", "dd", "psi+", "psi-", "phi+", "phi-", "P"}) {
    const auto psi = *states::by_name(name);
    INFO(name);
    CHECK(fidelity(state_from_scene(scene_from_state(psi)), psi) >= 1 - EPS_NUM);
  }
  sampling::Rng rng(43);
  for (int i = 0; i < 1000; ++i) {
    const auto psi = i % 4 == 0   ? sampling::random_product(rng)
                     : i % 4 == 1 ? sampling::random_mes(rng)
                     : i % 4 == 2 ? sampling::random_partial(rng)
                                  : sampling::random_state(rng);
    const double f = oracle::overlap2(to_oracle(state_from_scene(scene_from_state(psi))),
                                      to_oracle(psi));
    CHECK(f >= 1 - EPS_NUM);
  }
  SECTION("an MES frame of minus identity is psi-") {
    Scene s;
    SceneLayer layer;
    layer.kind = LayerKind::Mes;
    layer.spheres[0] = {Frame(), std::nullopt};
    layer.spheres[1] = {Frame(-Mat3::Identity()), std::nullopt};
    s.layers.push_back(layer);
    CHECK(fidelity(state_from_scene(s), states::psi_minus()) >= 1 - EPS_NUM);
  }
}

TEST_CASE("scene equivalence", "[scene]") {
  SECTION("turning uu's second frame about z keeps the state") {
    Scene s = scene_from_state(states::up_up());
    const Scene canonical_scene = s;
    s.layers[0].spheres[1].frame = Frame(rot_z(0.8));
    CHECK(scenes_equivalent(s, canonical_scene));
  }
  SECTION("phi+ and phi- differ") {
    CHECK_FALSE(scenes_equivalent(scene_from_state(states::phi_plus()),
                                  scene_from_state(states::phi_minus())));
  }
  SECTION("a rigid turn of both psi- frames, relabeled, is psi- again") {
    Scene s = scene_from_state(states::psi_minus());
    const Mat3 r = rot_z(kPi / 2);
    for (auto& view : s.layers[0].spheres) view.frame = Frame(r * view.frame.axes());
    const Scene fixed = with_fixed_first_frame(s);
    CHECK(fixed.layers[0].spheres[0].frame.axes() == Mat3::Identity());
    CHECK(scenes_equivalent(fixed, scene_from_state(states::psi_minus())));
  }
  SECTION("fixing the first frame never changes a separable state") {
    sampling::Rng rng(44);
    for (int i = 0; i < 50; ++i) {
      Scene s = scene_from_state(sampling::random_product(rng));
      const Mat3 r = rotation_of(sampling::random_su2(rng));
      for (auto& view : s.layers[0].spheres) {
        view.frame = Frame(r * view.frame.axes());
        view.arrow = r * *view.arrow;
      }
      const Scene fixed = with_fixed_first_frame(s);
      CHECK(fixed.layers[0].spheres[0].frame.axes().isApprox(Mat3::Identity(), 1e-12));
      CHECK(fidelity(state_from_scene(fixed), state_from_scene(s)) >= 1 - EPS_NUM);
    }
  }
}

TEST_CASE("scene validation", "[scene]") {
  const Scene good = scene_from_state(states::partial_p());
  CHECK_NOTHROW(validate(good));

  SECTION("empty") { CHECK_THROWS_AS(validate(Scene{}), InvalidScene); }
  SECTION("layer order") {
    Scene s = good;
    std::swap(s.layers[0], s.layers[1]);
    CHECK_THROWS_AS(validate(s), InvalidScene);
  }
  SECTION("weights") {
    Scene s = good;
    s.layers[0].weight = 0.9;
    CHECK_THROWS_AS(validate(s), InvalidScene);
  }
  SECTION("non-orthonormal frame") {
    Scene s = scene_from_state(states::psi_minus());
    Mat3 m = -Mat3::Identity();
    m(0, 0) = -0.5;
    s.layers[0].spheres[1].frame = Frame(m);
    CHECK_THROWS_AS(validate(s), InvalidScene);
  }
  SECTION("MES second frame must be left-handed") {
    Scene s = scene_from_state(states::psi_minus());
    s.layers[0].spheres[1].frame = Frame();
    CHECK_THROWS_AS(validate(s), InvalidScene);
  }
  SECTION("MES layers carry no arrows") {
    Scene s = scene_from_state(states::psi_minus());
    s.layers[0].spheres[0].arrow = Vec3(0, 0, 1);
    CHECK_THROWS_AS(validate(s), InvalidScene);
  }
  SECTION("separable arrows must agree") {
    Scene s = scene_from_state(states::up_up());
    s.layers[0].spheres[1].arrow = Vec3(1, 0, 0);
    CHECK_THROWS_AS(validate(s), InvalidScene);
  }
  SECTION("separable layers need arrows") {
    Scene s = scene_from_state(states::up_up());
    s.layers[0].spheres[0].arrow.reset();
    CHECK_THROWS_AS(state_from_scene(s), InvalidScene);
  }
  SECTION("mismatched Schmidt bases") {
    Scene s = good;
    s.layers[0].spheres[0].arrow = Vec3(1, 0, 0);
    s.layers[0].spheres[1].arrow = Vec3(1, 0, 0);
    CHECK_THROWS_AS(state_from_scene(s), InvalidScene);
  }
}

TEST_CASE("minimal rotation", "[scene]") {
  sampling::Rng rng(45);
  std::normal_distribution<double> n(0, 1);
  for (int i = 0; i < 200; ++i) {
    const Vec3 a = Vec3(n(rng), n(rng), n(rng)).normalized();
    const Vec3 b = Vec3(n(rng), n(rng), n(rng)).normalized();
    const Mat3 r = minimal_rotation(a, b);
    CHECK((r * a - b).norm() < EPS_NUM);
    CHECK(oracle::orthogonality_defect(to_oracle(r)) < EPS_NUM);
    // Rotation angle equals the angle between the vectors.
    const double angle = std::acos(std::clamp((r.trace() - 1) / 2, -1.0, 1.0));
    CHECK_THAT(angle, WithinAbs(std::acos(std::clamp(a.dot(b), -1.0, 1.0)), 1e-6));
  }
  SECTION("antiparallel") {
    const Mat3 r = minimal_rotation(Vec3(0, 0, -1), Vec3(0, 0, 1));
    CHECK((r * Vec3(0, 0, -1) - Vec3(0, 0, 1)).norm() < EPS_EXACT);
    CHECK_THAT(r.determinant(), WithinAbs(1, EPS_EXACT));
    // Half turn about x (the first of the tied axes).
    CHECK((r - Vec3(1, -1, -1).asDiagonal().toDenseMatrix()).norm() < EPS_EXACT);
  }
}
