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

#include "dualbloch/measures.hpp"

#include <algorithm>
#include <cmath>

namespace dualbloch {

std::string_view to_string(EntanglementKind kind) {
  switch (kind) {
    case EntanglementKind::Separable:
      return "separable";
    case EntanglementKind::Partial:
      return "partial";
    case EntanglementKind::Maximal:
      return "maximal";
  }
  return "unknown";
}

double purity(const Density2& rho) {
  return (rho.matrix * rho.matrix).trace().real();
}

double concurrence(const TwoQubitState& psi) {
  // sqrt(2 (1 - Tr rho1^2)) = 2 sqrt(det rho1) = 2 |det M| for rho1 = M M^dagger.
  // The last form avoids the cancellation in 1 - Tr rho1^2 near product
  // states, where the square root would amplify 1e-16 into 1e-8.
  return std::min(1.0, 2 * std::abs(psi.coefficients().determinant()));
}

Classification classify(const TwoQubitState& psi) {
  const SchmidtForm s = schmidt(psi);
  Classification c;
  c.r = std::clamp(s.alpha * s.alpha - s.beta * s.beta, 0.0, 1.0);
  c.r_tilde = std::clamp(2 * s.alpha * s.beta, 0.0, 1.0);
  if (c.r_tilde < EPS_CLASS) {
    c.kind = EntanglementKind::Separable;
  } else if (c.r < EPS_CLASS) {
    c.kind = EntanglementKind::Maximal;
  } else {
    c.kind = EntanglementKind::Partial;
  }
  return c;
}

}  // namespace dualbloch
