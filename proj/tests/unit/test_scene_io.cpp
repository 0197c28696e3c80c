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

#include "dualbloch/random.hpp"
#include "dualbloch/scene_io.hpp"
#include "support/helpers.hpp"

using namespace dualbloch;
using nlohmann::json;
using testing_support::read_fixture;

namespace {

// Structural equality with a numeric tolerance.
bool json_close(const json& a, const json& b, double tol) {
  if (a.is_number() && b.is_number()) return std::abs(a.get<double>() - b.get<double>()) <= tol;
  if (a.type() != b.type()) return false;
  if (a.is_array()) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!json_close(a[i], b[i], tol)) return false;
    return true;
  }
  if (a.is_object()) {
    if (a.size() != b.size()) return false;
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (!b.contains(it.key()) || !json_close(it.value(), b[it.key()], tol)) return false;
    }
    return true;
  }
  return a == b;
}

}  // namespace

TEST_CASE("scene documents match golden fixtures", "[scene_io]") {
  struct Case {
    const char* file;
    TwoQubitState state;
  };
  const Case cases[] = {{"scene_psi_minus.json", states::psi_minus()},
                        {"scene_up_up.json", states::up_up()},
                        {"scene_partial_p.json", states::partial_p()}};
  for (const auto& c : cases) {
    INFO(c.file);
    const std::string text = read_fixture(c.file);
    REQUIRE_FALSE(text.empty());
    const json golden = json::parse(text);
    const json produced = json::parse(scene_to_json(scene_from_state(c.state)).dump());
    CHECK(json_close(produced, golden, EPS_EXACT));
    CHECK(fidelity(state_from_scene(deserialize(text)), c.state) >= 1 - EPS_NUM);
  }
}

TEST_CASE("psi- document has inverted rows", "[scene_io]") {
  const auto doc = scene_to_json(scene_from_state(states::psi_minus()));
  CHECK(doc["version"] == 1);
  CHECK(doc["classification"] == "maximal");
  const auto& frame = doc["layers"][0]["spheres"][1]["frame"];
  CHECK(frame == json::parse("[[-1,0,0],[0,-1,0],[0,0,-1]]"));
  CHECK(doc["layers"][0]["spheres"][1]["arrow"].is_null());
}

TEST_CASE("serialize and deserialize are lossless", "[scene_io]") {
  sampling::Rng rng(51);
  for (int i = 0; i < 500; ++i) {
    const auto psi = i % 3 == 0   ? sampling::random_product(rng)
                     : i % 3 == 1 ? sampling::random_partial(rng)
                                  : sampling::random_mes(rng);
    const Scene s = scene_from_state(psi);
    const std::string text = serialize(s);
    const Scene back = deserialize(text);
    CHECK(serialize(back) == text);
    CHECK(fidelity(state_from_scene(back), psi) >= 1 - EPS_NUM);
  }
}

TEST_CASE("scene document errors", "[scene_io]") {
  SECTION("det 0.5 frame is an invalid scene") {
    CHECK_THROWS_AS(deserialize(read_fixture("scene_bad_det.json")), InvalidScene);
  }
  SECTION("malformed JSON reports an offset") {
    try {
      deserialize("{\"version\": 1,,}");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 14);
    }
  }
  SECTION("schema violations") {
    json doc = json::parse(read_fixture("scene_psi_minus.json"));
    auto broken = doc;
    broken["version"] = 2;
    CHECK_THROWS_AS(scene_from_json(broken), ParseError);
    broken = doc;
    broken.erase("layers");
    CHECK_THROWS_AS(scene_from_json(broken), ParseError);
    broken = doc;
    broken["layers"][0]["kind"] = "mixed";
    CHECK_THROWS_AS(scene_from_json(broken), ParseError);
    broken = doc;
    broken["layers"][0]["spheres"][1]["frame"][0] = json::array({1, 2});
    CHECK_THROWS_AS(scene_from_json(broken), ParseError);
    broken = doc;
    broken["weights"]["r"] = "zero";
    CHECK_THROWS_AS(scene_from_json(broken), ParseError);
  }
  SECTION("classification must match the layers") {
    json doc = json::parse(read_fixture("scene_psi_minus.json"));
    doc["classification"] = "separable";
    CHECK_THROWS_AS(scene_from_json(doc), InvalidScene);
  }
  SECTION("weights of absent layers must be zero") {
    json doc = json::parse(read_fixture("scene_up_up.json"));
    doc["weights"]["r_tilde"] = 0.5;
    CHECK_THROWS_AS(scene_from_json(doc), InvalidScene);
  }
}
