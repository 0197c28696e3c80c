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

#include <string_view>

#include "dualbloch/state.hpp"

namespace dualbloch {

enum class EntanglementKind { Separable, Partial, Maximal };

std::string_view to_string(EntanglementKind kind);

/// Two-layer radii of a pure state: r is the separable-part radius
/// (alpha^2 - beta^2), r_tilde the entangled-part radius (2 alpha beta).
struct Classification {
  EntanglementKind kind = EntanglementKind::Separable;
  double r = 1.0;
  double r_tilde = 0.0;

  /// Fractions of the unit sphere's surface held by each layer; they sum
  /// to one.
  double separable_share() const { return r * r; }
  double entangled_share() const { return r_tilde * r_tilde; }
};

/// Tr(rho^2).
double purity(const Density2& rho);

/// sqrt(2 (1 - Tr(rho_1^2))), computed from the reduced density of qubit 1.
double concurrence(const TwoQubitState& psi);

/// Radii from the Schmidt coefficients. Separable iff r_tilde < EPS_CLASS,
/// Maximal iff r < EPS_CLASS, Partial otherwise.
Classification classify(const TwoQubitState& psi);

}  // namespace dualbloch
