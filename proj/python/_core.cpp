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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dualbloch/gates.hpp"
#include "dualbloch/scene_io.hpp"
#include "dualbloch/stabilizers.hpp"
#include "dualbloch/svg.hpp"
#include "dualbloch/text_format.hpp"

namespace py = pybind11;
using namespace dualbloch;

namespace {

using Amps = std::vector<Complex>;

Amps to_list(const TwoQubitState& psi) {
  return {psi[0], psi[1], psi[2], psi[3]};
}

// States cross the boundary as 4 complex amplitudes or as state text.
TwoQubitState to_state(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_state(obj.cast<std::string>());
  const auto amps = obj.cast<Amps>();
  if (amps.size() != 4) throw InvalidArgument("expected 4 amplitudes");
  return TwoQubitState::from_amplitudes(Vec4c(amps[0], amps[1], amps[2], amps[3]));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-qubit dual Bloch sphere simulator (C++ core).";

  // Registered base first: translators are tried newest first.
  auto& error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<NotStabilizer>(m, "NotStabilizer", error.ptr());
  py::register_exception<InvalidScene>(m, "InvalidScene", error.ptr());

  m.def("parse_state", [](const std::string& text) { return to_list(parse_state(text)); },
        py::arg("text"), "Canonical amplitudes of an alias or amplitude list.");
  m.def("format_state",
        [](const py::object& s, int digits) { return format_state(to_state(s), digits); },
        py::arg("state"), py::arg("digits") = 17);
  m.def(
      "rotate",
      [](const py::object& s, const std::string& gen, double angle, bool radians) {
        const double theta = radians ? angle : angle * kPi;
        return to_list(
            dualbloch::apply(rotation_unitary(Generator::parse(gen), theta), to_state(s)));
      },
      py::arg("state"), py::arg("generator"), py::arg("angle"), py::arg("radians") = false,
      "Apply exp(i angle/2 G); angle in units of pi unless radians=True.");
  m.def(
      "classify",
      [](const py::object& s) {
        const auto c = classify(to_state(s));
        py::dict d;
        d["classification"] = std::string(to_string(c.kind));
        d["r"] = c.r;
        d["r_tilde"] = c.r_tilde;
        return d;
      },
      py::arg("state"));
  m.def("concurrence", [](const py::object& s) { return concurrence(to_state(s)); },
        py::arg("state"));
  m.def(
      "fidelity",
      [](const py::object& a, const py::object& b) { return fidelity(to_state(a), to_state(b)); },
      py::arg("a"), py::arg("b"));
  m.def("scene_json", [](const py::object& s) { return serialize(scene_from_state(to_state(s))); },
        py::arg("state"));
  m.def("state_from_scene_json",
        [](const std::string& text) { return to_list(state_from_scene(deserialize(text))); },
        py::arg("text"));
  m.def(
      "render_svg",
      [](const py::object& s, double elevation, double azimuth, bool inner_entangled) {
        SvgOptions opt;
        opt.elevation_deg = elevation;
        opt.azimuth_deg = azimuth;
        opt.merge = inner_entangled ? MergeStyle::InnerEntangled : MergeStyle::InnerSeparable;
        return render_svg(scene_from_state(to_state(s)), opt);
      },
      py::arg("state"), py::arg("elevation") = 70.0, py::arg("azimuth") = 110.0,
      py::arg("inner_entangled") = false);
  m.def("plane_of", [](const std::string& gen) { return plane_of(Generator::parse(gen)).name(); },
        py::arg("generator"));
  m.def(
      "eigenplanes",
      [](const py::object& s) {
        std::vector<std::string> out;
        for (const auto& g : eigenplanes(to_state(s))) out.push_back(g.name());
        return out;
      },
      py::arg("state"));
  m.def("stabilizer_graph_json", [] { return enumerate_stabilizers().to_json().dump(); });
  m.def("stabilizer_census", [] {
    const auto g = enumerate_stabilizers();
    py::dict d;
    d["states"] = g.nodes().size();
    d["separable"] = g.count(EntanglementKind::Separable);
    d["maximal"] = g.count(EntanglementKind::Maximal);
    return d;
  });
  m.def("verify_rules", [] {
    const auto r = verify_rules(enumerate_stabilizers());
    py::dict d;
    d["cases"] = r.cases;
    d["failures"] = r.failures.size();
    return d;
  });
  m.def(
      "cnot_trace",
      [](const py::object& s) {
        std::vector<Amps> out;
        for (const auto& step : trace(to_state(s), cnot_sequence()).steps) {
          out.push_back(to_list(step.state));
        }
        return out;
      },
      py::arg("input"), "States after each of the five CNOT rotations.");
}
