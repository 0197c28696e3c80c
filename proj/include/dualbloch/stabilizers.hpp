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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dualbloch/rules.hpp"
#include "json.hpp"

namespace dualbloch {

struct StabilizerNode {
  int id = 0;
  TwoQubitState state;
  EntanglementKind kind = EntanglementKind::Separable;
};

struct StabilizerEdge {
  int from = 0;
  int to = 0;
  Generator gen{Pauli::I, Pauli::X};
  int direction = 1;
};

class StabilizerGraph {
 public:
  const std::vector<StabilizerNode>& nodes() const noexcept { return nodes_; }
  /// One edge per (node, generator, direction), self-loops included.
  const std::vector<StabilizerEdge>& edges() const noexcept { return edges_; }

  std::optional<int> find(const TwoQubitState& psi) const;

  int count(EntanglementKind kind) const;

  nlohmann::ordered_json to_json() const;
  /// "from<TAB>to<TAB>GEN<TAB>+|-" per line.
  std::string edge_list() const;

 private:
  friend StabilizerGraph enumerate_stabilizers();
  using Key = std::array<long long, 8>;
  static Key key_of(const TwoQubitState& psi);

  std::vector<StabilizerNode> nodes_;
  std::vector<StabilizerEdge> edges_;
  std::map<Key, int> index_;
};

/// Breadth-first closure of |uu> under all quarter turns. Node ids follow
/// discovery order, so the result is deterministic.
StabilizerGraph enumerate_stabilizers();

/// One failed case of the rule/matrix commuting diagram.
struct RuleMismatch {
  int node = 0;
  Generator gen{Pauli::I, Pauli::X};
  int direction = 1;
  double fidelity = 0;
  std::string error;  ///< set when the rule engine threw
};

struct RuleVerification {
  int cases = 0;
  std::map<RuleKind, int> by_kind;
  std::vector<RuleMismatch> failures;
  bool ok() const { return failures.empty(); }
};

/// Runs every quarter turn on every node both graphically and as a matrix
/// and compares the reconstructed states.
RuleVerification verify_rules(const StabilizerGraph& graph,
                              SignOperand carrier = SignOperand::First);

}  // namespace dualbloch
