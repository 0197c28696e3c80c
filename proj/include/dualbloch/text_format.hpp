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

#include "dualbloch/state.hpp"

namespace dualbloch {

/// Parses "a", "a+bi", "bi", "i", "-i", "1e-3-2.5i". Throws ParseError with
/// the offending offset (relative to `text`).
Complex parse_complex(std::string_view text);

/// Parses a state: either a named alias (uu, ud, du, dd, psi+, psi-, phi+,
/// phi-, P) or four comma-separated complex literals in basis order
/// (uu, ud, du, dd). The result is normalized and phase-canonical.
TwoQubitState parse_state(std::string_view text);

/// `significant_digits` = 17 gives a lossless round trip through
/// parse_state; smaller values also flush components below 1e-12 to zero.
std::string format_complex(Complex z, int significant_digits);
std::string format_state(const TwoQubitState& psi, int significant_digits = 17);

/// "%.<digits>g"
std::string format_real(double x, int significant_digits);

}  // namespace dualbloch
