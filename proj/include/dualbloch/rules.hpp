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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dualbloch/scene.hpp"

namespace dualbloch {

/// One signed coordinate axis of one sphere, e.g. -x2.
struct AxisRef {
  int sphere = 1;  ///< 1 or 2
  int axis = 0;    ///< 0 = x, 1 = y, 2 = z
  int sign = 1;    ///< +1 or -1

  std::string name() const;  ///< "x1", "-z2", ...
  friend bool operator==(const AxisRef&, const AxisRef&) = default;
};

/// Oriented plane first ^ second; rotating by a positive angle turns `first`
/// toward `second`.
struct Plane {
  AxisRef first;
  AxisRef second;

  bool is_local() const { return first.sphere == second.sphere; }
  std::string name() const;  ///< "y2^z2"
  friend bool operator==(const Plane&, const Plane&) = default;
};

/// Generator <-> plane table. Local generators rotate the two other axes of
/// their sphere (IX -> y2^z2, XI -> y1^z1, ...); double-Pauli ab -> a1^b2.
Plane plane_of(const Generator& gen);

/// Which operand of the wedge carries the sign of a negative direction.
enum class SignOperand { First, Second };

/// plane_of(gen) with direction folded into one operand's sign.
Plane signed_plane(const Generator& gen, int direction,
                   SignOperand carrier = SignOperand::First);

enum class PlaneClass { Eigen, WithinSeparable, WithinMes, ToSeparable, ToMes };

std::string_view to_string(PlaneClass c);

/// Generators G with |<psi|G|psi>| = 1, in all_generators() order.
/// Throws NotStabilizer unless psi is a stabilizer state (exactly three).
std::vector<Generator> eigenplanes(const TwoQubitState& psi);

bool is_stabilizer_state(const TwoQubitState& psi);

/// Class of the quarter turn about `gen`, decided by matrix simulation.
PlaneClass classify_plane(const TwoQubitState& psi, const Generator& gen);

using PlaneCensus = std::map<PlaneClass, int>;

PlaneCensus plane_census(const TwoQubitState& psi);

enum class RuleKind { Eigen, Local, SeparableToSeparable, EntangledToSeparable, SeparableToEntangled };

std::string_view to_string(RuleKind kind);

struct RuleResult {
  Scene scene;
  RuleKind kind;
};

/// Quarter turn (angle direction * pi/2) carried out on the drawing alone.
/// Dispatch: eigen check, local, S-S, E-S, S-E. The input must be a
/// single-layer, axis-aligned scene (NotStabilizer otherwise).
RuleResult apply_rule_traced(const Scene& scene, const Generator& gen, int direction,
                             SignOperand carrier = SignOperand::First);

Scene apply_rule(const Scene& scene, const Generator& gen, int direction,
                 SignOperand carrier = SignOperand::First);

/// Frames in {0, +-1} and arrows on a coordinate axis, one layer.
bool is_axis_aligned(const Scene& scene, double tol = EPS_NUM);

}  // namespace dualbloch
