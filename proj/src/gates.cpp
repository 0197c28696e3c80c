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

#include "dualbloch/gates.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <optional>

namespace dualbloch {

GateSequence cnot_sequence() {
  const double q = kPi / 2;
  GateSequence seq;
  seq.steps = {
      {Generator(Pauli::Y, Pauli::I), -q, "local turn of qubit 1"},
      {Generator(Pauli::X, Pauli::X), -q, "entangling turn"},
      {Generator(Pauli::I, Pauli::X), q, "local turn of qubit 2"},
      {Generator(Pauli::X, Pauli::I), q, "local turn of qubit 1"},
      {Generator(Pauli::Y, Pauli::I), q, "local turn of qubit 1"},
  };
  seq.global_phase = std::polar(1.0, -kPi / 4);
  return seq;
}

Mat4 compose(const std::vector<RotationStep>& steps) {
  Mat4 u = Mat4::Identity();
  for (const auto& s : steps) u = rotation_unitary(s.gen, s.angle) * u;
  return u;
}

Mat4 compose(const GateSequence& sequence) {
  return sequence.global_phase * compose(sequence.steps);
}

Mat4 cnot_matrix() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

GateTrace trace(const TwoQubitState& input, const std::vector<RotationStep>& steps) {
  GateTrace t{input, {}, {1.0, 0.0}};
  TwoQubitState current = input;
  for (const auto& s : steps) {
    current = dualbloch::apply(rotation_unitary(s.gen, s.angle), current);
    t.steps.push_back({s, current, scene_from_state(current)});
  }
  return t;
}

GateTrace trace(const TwoQubitState& input, const GateSequence& sequence) {
  GateTrace t = trace(input, sequence.steps);
  t.global_phase = sequence.global_phase;
  return t;
}

std::vector<RotationStep> parse_sequence(std::string_view text) {
  std::vector<RotationStep> steps;
  std::size_t start = 0;
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (start <= text.size()) {
    std::size_t stop = text.find(';', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::size_t b = start;
    std::size_t e = stop;
    while (b < e && is_space(text[b])) ++b;
    while (e > b && is_space(text[e - 1])) --e;
    if (b == e) {
      // Only a trailing ';' (or an empty text) may leave an empty item.
      if (stop != text.size()) throw ParseError("empty sequence item", b);
      break;
    }
    const std::string_view item = text.substr(b, e - b);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected GEN:angle", b);
    std::string_view gen_text = item.substr(0, colon);
    while (!gen_text.empty() && is_space(gen_text.back())) gen_text.remove_suffix(1);
    std::optional<Generator> gen;
    try {
      gen = Generator::parse(gen_text);
    } catch (const ParseError& err) {
      throw ParseError("invalid generator '" + std::string(gen_text) + "'", b + err.position());
    } catch (const InvalidArgument& err) {
      throw ParseError(err.what(), b);
    }
    std::size_t num = colon + 1;
    while (num < item.size() && is_space(item[num])) ++num;
    const char* first = item.data() + num;
    const char* last = item.data() + item.size();
    if (first < last && *first == '+') ++first;
    double units = 0;
    auto [ptr, ec] = std::from_chars(first, last, units);
    if (ec != std::errc() || ptr != last || !std::isfinite(units)) {
      throw ParseError("expected a finite angle in units of pi", b + num);
    }
    steps.push_back({*gen, units * kPi, {}});
    if (stop == text.size()) break;
    start = stop + 1;
  }
  return steps;
}

std::string format_sequence(const std::vector<RotationStep>& steps) {
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out += "; ";
    out += fmt::format("{}:{}", s.gen.name(), s.angle / kPi);
  }
  return out;
}

}  // namespace dualbloch
