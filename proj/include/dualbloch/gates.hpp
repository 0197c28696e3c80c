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

#include <string>
#include <string_view>
#include <vector>

#include "dualbloch/scene.hpp"

namespace dualbloch {

struct RotationStep {
  Generator gen;
  double angle;  ///< radians
  std::string note;
};

struct GateSequence {
  std::vector<RotationStep> steps;  ///< application order
  Complex global_phase{1.0, 0.0};
};

/// CNOT (control = qubit 1) as five Pauli rotations and a phase of e^{-i pi/4}.
GateSequence cnot_sequence();

/// U_n ... U_2 U_1 for steps in application order; identity when empty.
Mat4 compose(const std::vector<RotationStep>& steps);

/// global_phase * compose(steps).
Mat4 compose(const GateSequence& sequence);

Mat4 cnot_matrix();

struct TraceStep {
  RotationStep step;
  TwoQubitState state;  ///< canonical state after this step
  Scene scene;
};

struct GateTrace {
  TwoQubitState input;
  std::vector<TraceStep> steps;
  Complex global_phase{1.0, 0.0};

  const TwoQubitState& output() const { return steps.empty() ? input : steps.back().state; }
};

GateTrace trace(const TwoQubitState& input, const std::vector<RotationStep>& steps);
GateTrace trace(const TwoQubitState& input, const GateSequence& sequence);

/// "YI:-0.5; XX:-0.5; IX:0.5" with angles in units of pi. Throws ParseError.
std::vector<RotationStep> parse_sequence(std::string_view text);
std::string format_sequence(const std::vector<RotationStep>& steps);

}  // namespace dualbloch
