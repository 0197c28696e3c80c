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

#include "dualbloch/cli.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "dualbloch/api.hpp"
#include "dualbloch/random.hpp"
#include "dualbloch/scene_io.hpp"
#include "dualbloch/stabilizers.hpp"
#include "dualbloch/svg.hpp"
#include "dualbloch/text_format.hpp"

namespace dualbloch {

namespace {

constexpr int kHumanDigits = 6;

std::string num(double x) {
  if (std::abs(x) < EPS_EXACT) x = 0;
  return format_real(x, kHumanDigits);
}

std::string vec(const Vec3& v) { return fmt::format("({}, {}, {})", num(v[0]), num(v[1]), num(v[2])); }

std::string measure_line(const TwoQubitState& psi) {
  const Classification c = classify(psi);
  return fmt::format("r={} r_tilde={} concurrence={} class={}", num(c.r), num(c.r_tilde),
                     num(concurrence(psi)), to_string(c.kind));
}

void print_scene_text(std::ostream& out, const Scene& scene) {
  fmt::print(out, "classification: {}\n", to_string(scene.classification()));
  for (const auto& layer : scene.layers) {
    fmt::print(out, "layer {} (weight {})\n",
               layer.kind == LayerKind::Separable ? "separable" : "mes", num(layer.weight));
    for (int s = 0; s < 2; ++s) {
      const auto& v = layer.spheres[s];
      fmt::print(out, "  sphere {}: x{}={} y{}={} z{}={} {}\n", s + 1, s + 1, vec(v.frame.axis(0)),
                 s + 1, vec(v.frame.axis(1)), s + 1, vec(v.frame.axis(2)),
                 v.arrow ? "arrow=" + vec(*v.arrow) : std::string("dot"));
    }
  }
}

void print_trace(std::ostream& out, const GateTrace& t) {
  fmt::print(out, "0 input        {}  {}\n", format_state(t.input, kHumanDigits),
             measure_line(t.input));
  int i = 0;
  for (const auto& s : t.steps) {
    const std::string label = fmt::format("{}:{}", s.step.gen.name(), num(s.step.angle / kPi));
    fmt::print(out, "{} {:<12} {}  {}\n", ++i, label, format_state(s.state, kHumanDigits),
               measure_line(s.state));
  }
}

void write_trace_svgs(const GateTrace& t, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const auto write = [&](int i, const TwoQubitState& psi, const std::string& caption) {
    const auto path = std::filesystem::path(dir) / fmt::format("step{}.svg", i);
    std::ofstream f(path);
    SvgOptions opt;
    opt.caption = caption;
    f << render_svg(scene_from_state(psi), opt);
    if (!f) throw Error("cannot write " + path.string());
  };
  write(0, t.input, "input " + format_state(t.input, 4));
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    write(static_cast<int>(i) + 1, s.state,
          fmt::format("{}:{}  {}", s.step.gen.name(), num(s.step.angle / kPi),
                      format_state(s.state, 4)));
  }
}

int default_port() {
  if (const char* env = std::getenv("DUALBLOCH_PORT")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("DUALBLOCH_PORT is not a number: ") + env);
    }
  }
  return 8080;
}

/// Property checks on random states; returns the number of failures.
int selfcheck(std::ostream& out, std::uint64_t seed, int samples) {
  sampling::Rng rng(seed);
  int failures = 0;
  const auto check = [&](bool ok, const std::string& what, int i) {
    if (!ok) {
      ++failures;
      if (failures <= 10) fmt::print(out, "FAIL sample {}: {}\n", i, what);
    }
  };
  for (int i = 0; i < samples; ++i) {
    TwoQubitState psi;
    switch (i % 4) {
      case 0:
        psi = sampling::random_state(rng);
        break;
      case 1:
        psi = sampling::random_product(rng);
        break;
      case 2:
        psi = sampling::random_mes(rng);
        break;
      default:
        psi = sampling::random_partial(rng);
    }
    const Classification c = classify(psi);
    const Density2 rho = reduced_density(psi, 1);
    const double r = bloch_vector(rho).norm();
    const SchmidtForm s = schmidt(psi);
    check(std::abs(c.r * c.r + c.r_tilde * c.r_tilde - 1) <= EPS_NUM, "r^2 + r_tilde^2 = 1", i);
    check(std::abs(purity(rho) - (1 + r * r) / 2) <= EPS_NUM, "purity-radius identity", i);
    check(std::abs(concurrence(psi) - 2 * s.alpha * s.beta) <= EPS_NUM, "concurrence = 2ab", i);
    check(fidelity(state_from_scene(scene_from_state(psi)), psi) >= 1 - EPS_NUM,
          "scene roundtrip", i);
  }
  fmt::print(out, "selfcheck seed={} samples={}: {} failure(s)\n", seed, samples, failures);
  return failures;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-qubit dual Bloch sphere simulator", "dualbloch"};
  app.require_subcommand(1);
  std::function<int()> action;

  // state show|parse
  std::string state_text;
  int digits = kHumanDigits;
  auto* state_cmd = app.add_subcommand("state", "Inspect a state");
  state_cmd->require_subcommand(1);
  auto* show = state_cmd->add_subcommand("show", "Amplitudes, Bloch vectors and measures");
  show->add_option("state", state_text, "Alias or four comma-separated amplitudes")->required();
  show->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1, 17));
  show->callback([&] {
    action = [&] {
      const auto psi = parse_state(state_text);
      fmt::print(out, "state: {}\n", format_state(psi, digits));
      fmt::print(out, "bloch1: {}\nbloch2: {}\n", vec(bloch_vector(reduced_density(psi, 1))),
                 vec(bloch_vector(reduced_density(psi, 2))));
      fmt::print(out, "{}\n", measure_line(psi));
      return kExitOk;
    };
  });
  auto* parse = state_cmd->add_subcommand("parse", "Canonical form at full precision");
  parse->add_option("state", state_text, "Alias or four comma-separated amplitudes")->required();
  parse->callback([&] {
    action = [&] {
      fmt::print(out, "{}\n", format_state(parse_state(state_text)));
      return kExitOk;
    };
  });

  // rotate
  std::string gen_text;
  double angle = 0;
  bool radians = false;
  auto* rotate = app.add_subcommand("rotate", "Apply exp(i angle/2 G) to a state");
  rotate->add_option("state", state_text, "Input state")->required();
  rotate->add_option("generator", gen_text, "Two Pauli letters, e.g. IX")->required();
  rotate->add_option("angle", angle, "Angle in units of pi")->required();
  rotate->add_flag("--radians", radians, "Angle is in radians");
  rotate->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1, 17));
  rotate->callback([&] {
    action = [&] {
      const auto psi = parse_state(state_text);
      const auto gen = Generator::parse(gen_text);
      const double theta = radians ? angle : angle * kPi;
      fmt::print(out, "{}\n", format_state(dualbloch::apply(rotation_unitary(gen, theta), psi), digits));
      return kExitOk;
    };
  });

  // measure
  auto* measure = app.add_subcommand("measure", "Radii, concurrence and class");
  measure->add_option("state", state_text, "Input state")->required();
  measure->callback([&] {
    action = [&] {
      fmt::print(out, "{}\n", measure_line(parse_state(state_text)));
      return kExitOk;
    };
  });

  // scene
  bool as_json = false;
  bool as_svg = false;
  std::string merge = "inner-separable";
  SvgOptions svg_opts;
  auto* scene_cmd = app.add_subcommand("scene", "Dual-sphere scene of a state");
  scene_cmd->add_option("state", state_text, "Input state")->required();
  auto* json_flag = scene_cmd->add_flag("--json", as_json, "Scene document");
  scene_cmd->add_flag("--svg", as_svg, "SVG drawing")->excludes(json_flag);
  scene_cmd->add_option("--merge", merge, "Composite style")
      ->check(CLI::IsMember({"inner-separable", "inner-entangled"}));
  scene_cmd->add_option("--elevation", svg_opts.elevation_deg, "View elevation, degrees");
  scene_cmd->add_option("--azimuth", svg_opts.azimuth_deg, "View azimuth, degrees");
  scene_cmd->callback([&] {
    action = [&] {
      const Scene scene = scene_from_state(parse_state(state_text));
      if (as_json) {
        fmt::print(out, "{}\n", scene_to_json(scene).dump(2));
      } else if (as_svg) {
        svg_opts.merge =
            merge == "inner-entangled" ? MergeStyle::InnerEntangled : MergeStyle::InnerSeparable;
        out << render_svg(scene, svg_opts);
      } else {
        print_scene_text(out, scene);
      }
      return kExitOk;
    };
  });

  // stabilizers
  bool graph = false;
  bool census = false;
  bool edges = false;
  auto* stab = app.add_subcommand("stabilizers", "The 60-state stabilizer graph");
  auto* graph_flag = stab->add_flag("--graph", graph, "Graph as JSON");
  auto* edges_flag = stab->add_flag("--edges", edges, "Edge list (from, to, generator, sign)");
  stab->add_flag("--census", census, "Node counts (default)")->excludes(graph_flag, edges_flag);
  graph_flag->excludes(edges_flag);
  stab->callback([&] {
    action = [&] {
      const StabilizerGraph g = enumerate_stabilizers();
      if (graph) {
        fmt::print(out, "{}\n", g.to_json().dump());
      } else if (edges) {
        out << g.edge_list();
      } else {
        fmt::print(out, "{} states: {} separable, {} maximally entangled\n", g.nodes().size(),
                   g.count(EntanglementKind::Separable), g.count(EntanglementKind::Maximal));
      }
      return kExitOk;
    };
  });

  // cnot-trace / sequence
  std::string svg_dir;
  std::string sequence_text;
  auto* cnot = app.add_subcommand("cnot-trace", "Step through the five-rotation CNOT");
  cnot->add_option("input", state_text, "Input state")->required();
  cnot->add_option("--svg-dir", svg_dir, "Write one SVG per step into this directory");
  cnot->add_flag("--json", as_json, "Trace as JSON");
  cnot->callback([&] {
    action = [&] {
      const GateTrace t = trace(parse_state(state_text), cnot_sequence());
      if (as_json) {
        fmt::print(out, "{}\n", trace_json(t).dump());
      } else {
        fmt::print(out, "CNOT = e^(-i pi/4) * {}\n", format_sequence(cnot_sequence().steps));
        print_trace(out, t);
      }
      if (!svg_dir.empty()) write_trace_svgs(t, svg_dir);
      return kExitOk;
    };
  });
  auto* seq = app.add_subcommand("sequence", "Step through a rotation sequence");
  seq->add_option("input", state_text, "Input state")->required();
  seq->add_option("steps", sequence_text, "e.g. \"YI:-0.5; XX:-0.5\" (angles in units of pi)")
      ->required();
  seq->add_option("--svg-dir", svg_dir, "Write one SVG per step into this directory");
  seq->callback([&] {
    action = [&] {
      const GateTrace t = trace(parse_state(state_text), parse_sequence(sequence_text));
      print_trace(out, t);
      if (!svg_dir.empty()) write_trace_svgs(t, svg_dir);
      return kExitOk;
    };
  });

  // rules verify
  std::string carrier = "first";
  auto* rules = app.add_subcommand("rules", "Graphical rule engine");
  rules->require_subcommand(1);
  auto* verify = rules->add_subcommand("verify", "Compare rules with matrix simulation");
  verify->add_option("--sign-on", carrier, "Wedge operand carrying a negative direction")
      ->check(CLI::IsMember({"first", "second"}));
  verify->callback([&] {
    action = [&] {
      const auto report = verify_rules(enumerate_stabilizers(), carrier == "second"
                                                                    ? SignOperand::Second
                                                                    : SignOperand::First);
      for (const auto& [kind, n] : report.by_kind) fmt::print(out, "{}: {}\n", to_string(kind), n);
      for (const auto& f : report.failures) {
        fmt::print(out, "MISMATCH node {} {} {:+d}: fidelity {} {}\n", f.node, f.gen.name(),
                   f.direction, f.fidelity, f.error);
      }
      fmt::print(out, "{} cases, {} failures\n", report.cases, report.failures.size());
      return report.ok() ? kExitOk : kExitCompute;
    };
  });

  // serve
  int port = -1;
  std::string host = "127.0.0.1";
  std::string journal;
  auto* serve = app.add_subcommand("serve", "HTTP session API");
  serve->add_option("--port", port, "Port (default: $DUALBLOCH_PORT or 8080)")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--journal", journal, "Append-only session journal (replayed at start)");
  serve->callback([&] {
    action = [&] {
      Api api(journal.empty() ? std::nullopt : std::optional<std::string>(journal));
      HttpServer server(api);
      const int bound = server.bind(host, port < 0 ? default_port() : port);
      if (bound < 0) throw Error(fmt::format("cannot bind {}:{}", host, port));
      fmt::print(out, "listening on http://{}:{}\n", host, bound);
      out.flush();
      return server.listen() ? kExitOk : kExitCompute;
    };
  });

  // selfcheck
  std::uint64_t seed = 1;
  int samples = 1000;
  auto* self = app.add_subcommand("selfcheck", "Randomized invariant checks");
  self->add_option("--seed", seed, "RNG seed");
  self->add_option("--samples", samples, "Number of random states")->check(CLI::PositiveNumber);
  self->callback([&] {
    action = [&] { return selfcheck(out, seed, samples) == 0 ? kExitOk : kExitCompute; };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitCompute;
  }
}

}  // namespace dualbloch
