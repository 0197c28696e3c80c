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

#include <set>

#include "dualbloch/random.hpp"
#include "dualbloch/rules.hpp"
#include "dualbloch/stabilizers.hpp"
#include "dualbloch/text_format.hpp"
#include "support/helpers.hpp"

using namespace dualbloch;
using testing_support::to_oracle;

namespace {

Generator gen(const char* name) { return Generator::parse(name); }

std::vector<std::string> names(const std::vector<Generator>& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.name());
  return out;
}

// Matrix reference for a quarter turn, via the series exponential.
TwoQubitState quarter_turn(const TwoQubitState& psi, const Generator& g, int direction) {
  const auto u = oracle::expm_rotation(static_cast<int>(g.first()), static_cast<int>(g.second()),
                                       direction * kPi / 2);
  return testing_support::from_oracle(oracle::mul(u, to_oracle(psi)));
}

const StabilizerGraph& graph() {
  static const StabilizerGraph g = enumerate_stabilizers();
  return g;
}

}  // namespace

TEST_CASE("plane table", "[rules]") {
  CHECK(plane_of(gen("IX")).name() == "y2^z2");
  CHECK(plane_of(gen("IY")).name() == "z2^x2");
  CHECK(plane_of(gen("IZ")).name() == "x2^y2");
  CHECK(plane_of(gen("XI")).name() == "y1^z1");
  CHECK(plane_of(gen("ZI")).name() == "x1^y1");
  CHECK(plane_of(gen("XY")).name() == "x1^y2");
  CHECK(plane_of(gen("YX")).name() == "y1^x2");
  CHECK(plane_of(gen("ZZ")).name() == "z1^z2");
  CHECK(plane_of(gen("IX")).is_local());
  CHECK_FALSE(plane_of(gen("XX")).is_local());

  std::set<std::string> seen;
  for (const auto& g : all_generators()) seen.insert(plane_of(g).name());
  CHECK(seen.size() == 15);

  SECTION("signed planes") {
    CHECK(signed_plane(gen("XY"), 1).name() == "x1^y2");
    CHECK(signed_plane(gen("XY"), -1).name() == "-x1^y2");
    CHECK(signed_plane(gen("XY"), -1, SignOperand::Second).name() == "x1^-y2");
    CHECK_THROWS_AS(signed_plane(gen("XY"), 0), InvalidArgument);
  }
  SECTION("kind names") {
    CHECK(to_string(PlaneClass::ToMes) == "to-mes");
    CHECK(to_string(PlaneClass::WithinSeparable) == "within-separable");
    CHECK(to_string(RuleKind::EntangledToSeparable) == "E-S");
    CHECK(to_string(RuleKind::SeparableToEntangled) == "S-E");
  }
}

TEST_CASE("eigenplanes", "[rules]") {
  SECTION("up-left") {
    const auto psi = product_state(Vec2c(1, 0), Vec2c(1, -1));
    CHECK(names(eigenplanes(psi)) == std::vector<std::string>{"ZI", "IX", "ZX"});
  }
  SECTION("Bell states share one set") {
    for (const auto& psi : {states::phi_plus(), states::phi_minus(), states::psi_plus(),
                            states::psi_minus()})
      CHECK(names(eigenplanes(psi)) == std::vector<std::string>{"XX", "YY", "ZZ"});
  }
  SECTION("rotated psi-") {
    const auto psi = parse_state("1,-i,i,-1");
    CHECK(names(eigenplanes(psi)) == std::vector<std::string>{"XX", "YZ", "ZY"});
  }
  SECTION("non-stabilizer states are rejected") {
    CHECK_THROWS_AS(eigenplanes(states::partial_p()), NotStabilizer);
    CHECK_FALSE(is_stabilizer_state(states::partial_p()));
    CHECK(is_stabilizer_state(states::psi_minus()));
  }
  SECTION("separable nodes have two local and one double-Pauli eigenplane") {
    for (const auto& node : graph().nodes()) {
      const auto eig = eigenplanes(node.state);
      REQUIRE(eig.size() == 3);
      int local = 0;
      for (const auto& g : eig) local += g.is_local();
      CHECK(local == (node.kind == EntanglementKind::Separable ? 2 : 0));
    }
  }
}

TEST_CASE("plane classes", "[rules]") {
  CHECK(classify_plane(states::up_up(), gen("ZZ")) == PlaneClass::Eigen);
  CHECK(classify_plane(states::up_up(), gen("XY")) == PlaneClass::ToMes);
  CHECK(classify_plane(states::up_up(), gen("IX")) == PlaneClass::WithinSeparable);
  CHECK(classify_plane(states::psi_minus(), gen("IX")) == PlaneClass::WithinMes);
  CHECK(classify_plane(states::psi_minus(), gen("XY")) == PlaneClass::ToSeparable);

  SECTION("censuses") {
    const auto sep = plane_census(states::up_up());
    CHECK(sep.at(PlaneClass::Eigen) == 3);
    CHECK(sep.at(PlaneClass::WithinSeparable) == 8);
    CHECK(sep.at(PlaneClass::ToMes) == 4);
    CHECK(sep.at(PlaneClass::WithinMes) == 0);
    const auto mes = plane_census(states::phi_plus());
    CHECK(mes.at(PlaneClass::Eigen) == 3);
    CHECK(mes.at(PlaneClass::WithinMes) == 6);
    CHECK(mes.at(PlaneClass::ToSeparable) == 6);
  }
  SECTION("local turns never change an MES into anything else") {
    for (const auto& node : graph().nodes()) {
      if (node.kind != EntanglementKind::Maximal) continue;
      for (const auto& g : all_generators())
        if (g.is_local()) CHECK(classify_plane(node.state, g) == PlaneClass::WithinMes);
    }
  }
}

TEST_CASE("graphical rules on documented examples", "[rules]") {
  SECTION("psi- under XY becomes ud") {
    const auto r = apply_rule_traced(scene_from_state(states::psi_minus()), gen("XY"), 1);
    CHECK(r.kind == RuleKind::EntangledToSeparable);
    CHECK(scenes_equivalent(r.scene, scene_from_state(states::up_down())));
  }
  SECTION("uu under ZX becomes up tensor (up + i down)") {
    const auto r = apply_rule_traced(scene_from_state(states::up_up()), gen("ZX"), 1);
    CHECK(r.kind == RuleKind::SeparableToSeparable);
    const auto expected = product_state(Vec2c(1, 0), Vec2c(1, kI));
    CHECK(scenes_equivalent(r.scene, scene_from_state(expected)));
  }
  SECTION("uu under XY becomes phi-") {
    const auto r = apply_rule_traced(scene_from_state(states::up_up()), gen("XY"), 1);
    CHECK(r.kind == RuleKind::SeparableToEntangled);
    CHECK(scenes_equivalent(r.scene, scene_from_state(states::phi_minus())));
  }
  SECTION("eigen and local dispatch") {
    CHECK(apply_rule_traced(scene_from_state(states::up_up()), gen("ZZ"), 1).kind ==
          RuleKind::Eigen);
    CHECK(apply_rule_traced(scene_from_state(states::up_up()), gen("IX"), -1).kind ==
          RuleKind::Local);
    CHECK(apply_rule_traced(scene_from_state(states::psi_minus()), gen("XI"), 1).kind ==
          RuleKind::Local);
  }
  SECTION("output scenes keep the first frame fixed") {
    const Scene out = apply_rule(scene_from_state(states::up_up()), gen("XI"), 1);
    CHECK(out.layers[0].spheres[0].frame.axes().isApprox(Mat3::Identity(), 1e-12));
    CHECK(is_axis_aligned(out));
  }
}

TEST_CASE("graphical rules agree with matrix simulation", "[rules]") {
  for (SignOperand carrier : {SignOperand::First, SignOperand::Second}) {
    int cases = 0;
    for (const auto& node : graph().nodes()) {
      const Scene s = scene_from_state(node.state);
      for (const auto& g : all_generators()) {
        for (int dir : {1, -1}) {
          const Scene out = apply_rule(s, g, dir, carrier);
          const double f =
              oracle::overlap2(to_oracle(state_from_scene(out)), to_oracle(quarter_turn(node.state, g, dir)));
          if (f < 1 - EPS_NUM) {
            FAIL_CHECK("node " << node.id << " " << g.name() << " dir " << dir << " fidelity " << f);
          }
          ++cases;
        }
      }
    }
    CHECK(cases == 1800);
  }
}

TEST_CASE("sign carrier does not affect the result", "[rules]") {
  for (const auto& node : graph().nodes()) {
    const Scene s = scene_from_state(node.state);
    for (const auto& g : all_generators()) {
      const Scene a = apply_rule(s, g, -1, SignOperand::First);
      const Scene b = apply_rule(s, g, -1, SignOperand::Second);
      CHECK(scenes_equivalent(a, b));
    }
  }
}

TEST_CASE("quarter turns are inverted by the opposite turn", "[rules]") {
  for (const auto& node : graph().nodes()) {
    const Scene s = scene_from_state(node.state);
    for (const auto& g : all_generators()) {
      const Scene there = apply_rule(s, g, 1);
      const Scene back = apply_rule(there, g, -1);
      CHECK(scenes_equivalent(back, s));
    }
  }
}

TEST_CASE("rule engine preconditions", "[rules]") {
  const Scene bell = scene_from_state(states::phi_plus());
  CHECK_THROWS_AS(apply_rule(bell, gen("XX"), 2), InvalidArgument);
  CHECK_THROWS_AS(apply_rule(bell, gen("XX"), 0), InvalidArgument);
  CHECK_THROWS_AS(apply_rule(scene_from_state(states::partial_p()), gen("XX"), 1), NotStabilizer);
  const auto tilted = product_state(Vec2c(1, 0.3), Vec2c(1, 0));
  CHECK_FALSE(is_axis_aligned(scene_from_state(tilted)));
  CHECK_THROWS_AS(apply_rule(scene_from_state(tilted), gen("XX"), 1), NotStabilizer);
  CHECK(is_axis_aligned(bell));
  CHECK_FALSE(is_axis_aligned(scene_from_state(states::partial_p())));
}
