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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dualbloch/state.hpp"
#include "oracles.hpp"

#ifndef DUALBLOCH_FIXTURE_DIR
#define DUALBLOCH_FIXTURE_DIR "tests/fixtures"
#endif

namespace testing_support {

inline oracle::V4 to_oracle(const dualbloch::TwoQubitState& psi) {
  oracle::V4 v;
  for (int i = 0; i < 4; ++i) v[i] = psi[i];
  return v;
}

inline oracle::M4 to_oracle(const dualbloch::Mat4& m) {
  oracle::M4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = m(i, j);
  return out;
}

inline oracle::R3 to_oracle(const dualbloch::Mat3& m) {
  oracle::R3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = m(i, j);
  return out;
}

inline dualbloch::TwoQubitState from_oracle(const oracle::V4& v) {
  return dualbloch::TwoQubitState::from_amplitudes(v[0], v[1], v[2], v[3]);
}

inline double max_abs_diff(const oracle::V4& a, const oracle::V4& b) {
  double m = 0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(DUALBLOCH_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct MesPattern {
  std::string amplitudes;
  std::string axes[3];  // drawn directions of x2, y2, z2, e.g. "-z"
};

inline std::vector<MesPattern> load_mes_patterns() {
  std::ifstream in(fixture_path("mes_patterns.txt"));
  std::vector<MesPattern> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    MesPattern p;
    ls >> p.amplitudes >> p.axes[0] >> p.axes[1] >> p.axes[2];
    out.push_back(p);
  }
  return out;
}

/// "+y" -> (0, 1, 0).
inline dualbloch::Vec3 axis_vector(const std::string& s) {
  dualbloch::Vec3 v = dualbloch::Vec3::Zero();
  v[s[1] - 'x'] = s[0] == '-' ? -1.0 : 1.0;
  return v;
}

}  // namespace testing_support
