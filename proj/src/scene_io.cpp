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

#include "dualbloch/scene_io.hpp"

#include <cmath>

namespace dualbloch {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json vec_json(const Vec3& v) { return ordered_json::array({v.x(), v.y(), v.z()}); }

ordered_json frame_json(const Frame& f) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    rows.push_back(ordered_json::array({f.axes()(i, 0), f.axes()(i, 1), f.axes()(i, 2)}));
  }
  return rows;
}

[[noreturn]] void schema_error(const std::string& what) {
  throw ParseError("scene schema: " + what, 0);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema_error(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where + " is missing \"" + key + "\"");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) schema_error(where + " must be a number");
  return v.get<double>();
}

Vec3 vec_from(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 3) schema_error(where + " must be an array of 3 numbers");
  return Vec3(number(v[0], where), number(v[1], where), number(v[2], where));
}

Frame frame_from(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 3) schema_error(where + " must hold 3 rows");
  Mat3 m;
  for (int i = 0; i < 3; ++i) m.row(i) = vec_from(v[i], where).transpose();
  return Frame(m);
}

}  // namespace

ordered_json scene_to_json(const Scene& scene) {
  ordered_json doc;
  doc["version"] = kSceneSchemaVersion;
  doc["classification"] = std::string(to_string(scene.classification()));
  doc["weights"] = {{"r", scene.r()}, {"r_tilde", scene.r_tilde()}};
  ordered_json layers = ordered_json::array();
  for (const auto& layer : scene.layers) {
    ordered_json spheres = ordered_json::array();
    for (const auto& view : layer.spheres) {
      ordered_json s;
      s["frame"] = frame_json(view.frame);
      s["arrow"] = view.arrow ? vec_json(*view.arrow) : ordered_json(nullptr);
      spheres.push_back(std::move(s));
    }
    ordered_json l;
    l["kind"] = layer.kind == LayerKind::Separable ? "separable" : "mes";
    l["spheres"] = std::move(spheres);
    layers.push_back(std::move(l));
  }
  doc["layers"] = std::move(layers);
  return doc;
}

Scene scene_from_json(const json& doc) {
  const json& version = member(doc, "version", "document");
  if (!version.is_number_integer() || version.get<int>() != kSceneSchemaVersion) {
    schema_error("unsupported version");
  }
  const json& cls = member(doc, "classification", "document");
  if (!cls.is_string()) schema_error("classification must be a string");
  const json& weights = member(doc, "weights", "document");
  const double r = number(member(weights, "r", "weights"), "weights.r");
  const double r_tilde = number(member(weights, "r_tilde", "weights"), "weights.r_tilde");

  const json& layers = member(doc, "layers", "document");
  if (!layers.is_array()) schema_error("layers must be an array");
  Scene scene;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const std::string where = "layers[" + std::to_string(i) + "]";
    const json& kind = member(layers[i], "kind", where);
    SceneLayer layer;
    if (kind == "separable") {
      layer.kind = LayerKind::Separable;
      layer.weight = r;
    } else if (kind == "mes") {
      layer.kind = LayerKind::Mes;
      layer.weight = r_tilde;
    } else {
      schema_error(where + ".kind must be \"separable\" or \"mes\"");
    }
    const json& spheres = member(layers[i], "spheres", where);
    if (!spheres.is_array() || spheres.size() != 2) schema_error(where + " needs 2 spheres");
    for (int s = 0; s < 2; ++s) {
      const std::string sw = where + ".spheres[" + std::to_string(s) + "]";
      layer.spheres[s].frame = frame_from(member(spheres[s], "frame", sw), sw + ".frame");
      const json& arrow = member(spheres[s], "arrow", sw);
      if (!arrow.is_null()) layer.spheres[s].arrow = vec_from(arrow, sw + ".arrow");
    }
    scene.layers.push_back(layer);
  }
  validate(scene);
  if (cls.get<std::string>() != to_string(scene.classification())) {
    throw InvalidScene("classification \"" + cls.get<std::string>() +
                       "\" does not match the layers");
  }
  // Weights of absent layers must be zero so that serialization is lossless.
  if ((!scene.layer(LayerKind::Separable) && r != 0) ||
      (!scene.layer(LayerKind::Mes) && r_tilde != 0)) {
    throw InvalidScene("weight given for a layer that is not present");
  }
  return scene;
}

std::string serialize(const Scene& scene) { return scene_to_json(scene).dump(); }

Scene deserialize(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  return scene_from_json(doc);
}

}  // namespace dualbloch
