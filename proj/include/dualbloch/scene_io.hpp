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

#include "dualbloch/scene.hpp"
#include "json.hpp"

namespace dualbloch {

inline constexpr int kSceneSchemaVersion = 1;

/// Scene document (schema version 1):
///
///   { "version": 1, "classification": "separable" | "partial" | "maximal",
///     "weights": {"r": number, "r_tilde": number},
///     "layers": [ { "kind": "separable" | "mes",
///                   "spheres": [ {"frame": [[3], [3], [3]], "arrow": [3] | null},
///                                {...} ] } ] }
///
/// Frames are written row by row. Numbers use the shortest representation
/// that reads back to the same double.
nlohmann::ordered_json scene_to_json(const Scene& scene);

/// Throws ParseError on schema violations and InvalidScene when the decoded
/// scene breaks its invariants.
Scene scene_from_json(const nlohmann::json& doc);

/// Compact single-line form of scene_to_json.
std::string serialize(const Scene& scene);

/// Throws ParseError (with byte offset) on malformed JSON.
Scene deserialize(std::string_view text);

}  // namespace dualbloch
