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

#include "dualbloch/gates.hpp"
#include "dualbloch/measures.hpp"
#include "support/helpers.hpp"

using namespace dualbloch;
using Catch::Matchers::WithinAbs;
using testing_support::to_oracle;

namespace {

// Oracle product of series exponentials, phase included.
oracle::M4 oracle_compose(const GateSequence& seq) {
  oracle::M4 m = oracle::identity4();
  for (const auto& s : seq.steps) {
    m = oracle::mul(oracle::expm_rotation(static_cast<int>(s.gen.first()),
                                          static_cast<int>(s.gen.second()), s.angle),
                    m);
  }
  for (auto& row : m)
    for (auto& e : row) e *= seq.global_phase;
  return m;
}

size_t parse_error_position(std::string_view text) {
  try {
    parse_sequence(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string_view::npos;
}

}  // namespace

TEST_CASE("CNOT sequence", "[gates]") {
  const GateSequence seq = cnot_sequence();
  REQUIRE(seq.steps.size() == 5);
  CHECK(seq.steps[0].gen.name() == "YI");
  CHECK_THAT(seq.steps[0].angle, WithinAbs(-kPi / 2, EPS_EXACT));
  CHECK(std::abs(seq.global_phase - std::polar(1.0, -kPi / 4)) < EPS_EXACT);
  CHECK(format_sequence(seq.steps) == "YI:-0.5; XX:-0.5; IX:0.5; XI:0.5; YI:0.5");

  const auto ref = oracle::cnot();
  CHECK(oracle::max_diff(to_oracle(compose(seq)), ref) < EPS_EXACT);
  CHECK(oracle::max_diff(oracle_compose(seq), ref) < EPS_EXACT);
  CHECK(oracle::max_diff(to_oracle(cnot_matrix()), ref) == 0.0);
  const Mat4 c = compose(seq);
  CHECK((c * c - Mat4::Identity()).cwiseAbs().maxCoeff() < EPS_EXACT);
}

TEST_CASE("composition", "[gates]") {
  CHECK(compose(std::vector<RotationStep>{}) == Mat4::Identity());
  const Generator ix = Generator::parse("IX");
  const std::vector<RotationStep> twice = {{ix, kPi / 2, {}}, {ix, kPi / 2, {}}};
  CHECK((compose(twice) - rotation_unitary(ix, kPi)).cwiseAbs().maxCoeff() < EPS_EXACT);
  // Application order: the first step acts first.
  const Generator xi = Generator::parse("XI");
  const Generator zi = Generator::parse("ZI");
  const std::vector<RotationStep> ordered = {{xi, 0.3, {}}, {zi, 0.7, {}}};
  CHECK((compose(ordered) - rotation_unitary(zi, 0.7) * rotation_unitary(xi, 0.3)).norm() <
        EPS_EXACT);
}

TEST_CASE("CNOT traces", "[gates]") {
  const auto seq = cnot_sequence();
  SECTION("uu stays uu") {
    const auto t = trace(states::up_up(), seq);
    REQUIRE(t.steps.size() == 5);
    CHECK(fidelity(t.output(), states::up_up()) >= 1 - EPS_EXACT);
    // After step 2: (up + down) (x) (up - i down); step 3 undoes the twist.
    const auto s2 = product_state(Vec2c(1, 1), Vec2c(1, -kI));
    const auto s3 = product_state(Vec2c(1, 1), Vec2c(1, 0));
    CHECK(fidelity(t.steps[1].state, s2) >= 1 - EPS_NUM);
    CHECK(fidelity(t.steps[2].state, s3) >= 1 - EPS_NUM);
  }
  SECTION("du becomes dd") {
    const auto t = trace(states::down_up(), seq);
    CHECK(fidelity(t.output(), states::down_down()) >= 1 - EPS_EXACT);
  }
  SECTION("(uu + du) becomes phi+ and entangles at step 2") {
    const auto input = TwoQubitState::from_amplitudes(1, 0, 1, 0);
    const auto t = trace(input, seq);
    CHECK(fidelity(t.output(), states::phi_plus()) >= 1 - EPS_EXACT);
    const auto mes = TwoQubitState::from_amplitudes(0, 1, kI, 0);
    CHECK(fidelity(t.steps[1].state, mes) >= 1 - EPS_NUM);
    CHECK(concurrence(t.input) < EPS_NUM);
    CHECK(concurrence(t.steps[0].state) < EPS_NUM);
    CHECK_THAT(concurrence(t.steps[1].state), WithinAbs(1, EPS_NUM));
  }
  SECTION("every intermediate scene reconstructs its state") {
    for (const auto& input : {states::up_up(), states::down_up(),
                              TwoQubitState::from_amplitudes(1, 0, 1, 0), states::partial_p()}) {
      const auto t = trace(input, seq);
      for (const auto& step : t.steps)
        CHECK(fidelity(state_from_scene(step.scene), step.state) >= 1 - EPS_NUM);
    }
  }
  SECTION("output matches the matrix on arbitrary input") {
    const auto input = TwoQubitState::from_amplitudes(Complex(0.3, 0.1), 0.5, Complex(0, -0.7), 0.2);
    const auto expected = oracle::mul(oracle::cnot(), to_oracle(input));
    CHECK(oracle::overlap2(to_oracle(trace(input, seq).output()), oracle::normalized(expected)) >=
          1 - EPS_NUM);
  }
}

TEST_CASE("sequence text", "[gates]") {
  const auto steps = parse_sequence("YI:-0.5; XX:-0.5; IX:0.5; XI:0.5; YI:0.5");
  REQUIRE(steps.size() == 5);
  CHECK(format_sequence(steps) == format_sequence(cnot_sequence().steps));
  CHECK(parse_sequence("").empty());
  CHECK(parse_sequence("zz:+0.25;").size() == 1);
  CHECK_THAT(parse_sequence("zz:+0.25")[0].angle, WithinAbs(kPi / 4, EPS_EXACT));

  CHECK(parse_error_position("XX:0.5; QQ:1") == 8);
  CHECK(parse_error_position("XX:0.5;;IX:1") == 7);
  CHECK(parse_error_position("XX") == 0);
  CHECK(parse_error_position("XX:abc") == 3);
  CHECK(parse_error_position("II:1") == 0);
  CHECK(parse_error_position("XX:1e999") == 3);
}
