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

#include "dualbloch/scene.hpp"

namespace dualbloch {

/// How a two-layer (partially entangled) scene is merged into one sphere.
enum class MergeStyle {
  /// Separable layer inside (radius r), MES shell outside. Axes start in the
  /// separable frame and switch to the MES frame at the inner radius.
  InnerSeparable,
  /// MES layer inside (radius r_tilde), separable shell outside; the arrow
  /// spans the shell only.
  InnerEntangled,
};

struct SvgOptions {
  /// Orthographic view angles, same convention as tikz-3dplot main coords.
  double elevation_deg = 70.0;
  double azimuth_deg = 110.0;
  /// Sphere radius in pixels.
  double radius = 90.0;
  MergeStyle merge = MergeStyle::InnerSeparable;
  /// Caption under the spheres; empty for none.
  std::string caption;
};

/// Two projected spheres side by side. Output depends only on the inputs.
std::string render_svg(const Scene& scene, const SvgOptions& options = {});

}  // namespace dualbloch
