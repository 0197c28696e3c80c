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

#include "dualbloch/stabilizers.hpp"

#include <cmath>
#include <deque>

namespace dualbloch {

StabilizerGraph::Key StabilizerGraph::key_of(const TwoQubitState& psi) {
  // Amplitudes rounded to 12 decimals.
  Key k{};
  for (int i = 0; i < 4; ++i) {
    k[2 * i] = std::llround(psi[i].real() * 1e12);
    k[2 * i + 1] = std::llround(psi[i].imag() * 1e12);
  }
  return k;
}

std::optional<int> StabilizerGraph::find(const TwoQubitState& psi) const {
  auto it = index_.find(key_of(psi));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int StabilizerGraph::count(EntanglementKind kind) const {
  int n = 0;
  for (const auto& node : nodes_) n += node.kind == kind;
  return n;
}

StabilizerGraph enumerate_stabilizers() {
  StabilizerGraph g;
  const auto add = [&g](const TwoQubitState& psi) {
    const auto key = StabilizerGraph::key_of(psi);
    auto it = g.index_.find(key);
    if (it != g.index_.end()) return std::pair{it->second, false};
    const int id = static_cast<int>(g.nodes_.size());
    g.nodes_.push_back({id, psi, classify(psi).kind});
    g.index_.emplace(key, id);
    return std::pair{id, true};
  };

  // Quarter-turn unitaries, computed once.
  std::vector<std::pair<Generator, Mat4>> turns;
  for (const auto& gen : all_generators()) {
    turns.emplace_back(gen, rotation_unitary(gen, kPi / 2));
    turns.emplace_back(gen, rotation_unitary(gen, -kPi / 2));
  }

  std::deque<int> queue{add(states::up_up()).first};
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    const TwoQubitState psi = g.nodes_[id].state;
    for (std::size_t t = 0; t < turns.size(); ++t) {
      const auto [to, fresh] = add(dualbloch::apply(turns[t].second, psi));
      if (fresh) queue.push_back(to);
      g.edges_.push_back({id, to, turns[t].first, t % 2 == 0 ? 1 : -1});
    }
  }
  return g;
}

nlohmann::ordered_json StabilizerGraph::to_json() const {
  using nlohmann::ordered_json;
  ordered_json nodes = ordered_json::array();
  for (const auto& n : nodes_) {
    ordered_json amps = ordered_json::array();
    for (int i = 0; i < 4; ++i) amps.push_back({n.state[i].real(), n.state[i].imag()});
    ordered_json node;
    node["id"] = n.id;
    node["amplitudes"] = std::move(amps);
    node["class"] = std::string(to_string(n.kind));
    nodes.push_back(std::move(node));
  }
  ordered_json edges = ordered_json::array();
  for (const auto& e : edges_) {
    ordered_json edge;
    edge["from"] = e.from;
    edge["to"] = e.to;
    edge["generator"] = e.gen.name();
    edge["direction"] = e.direction;
    edges.push_back(std::move(edge));
  }
  ordered_json doc;
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  return doc;
}

std::string StabilizerGraph::edge_list() const {
  std::string out;
  for (const auto& e : edges_) {
    out += std::to_string(e.from) + '\t' + std::to_string(e.to) + '\t' + e.gen.name() + '\t' +
           (e.direction > 0 ? '+' : '-') + '\n';
  }
  return out;
}

RuleVerification verify_rules(const StabilizerGraph& graph, SignOperand carrier) {
  RuleVerification report;
  for (const auto& node : graph.nodes()) {
    const Scene scene = scene_from_state(node.state);
    for (const auto& gen : all_generators()) {
      for (int dir : {1, -1}) {
        ++report.cases;
        const auto expected = dualbloch::apply(rotation_unitary(gen, dir * kPi / 2), node.state);
        try {
          const RuleResult r = apply_rule_traced(scene, gen, dir, carrier);
          ++report.by_kind[r.kind];
          const double f = fidelity(state_from_scene(r.scene), expected);
          if (f < 1 - EPS_NUM) report.failures.push_back({node.id, gen, dir, f, {}});
        } catch (const Error& e) {
          report.failures.push_back({node.id, gen, dir, 0.0, e.what()});
        }
      }
    }
  }
  return report;
}

}  // namespace dualbloch
