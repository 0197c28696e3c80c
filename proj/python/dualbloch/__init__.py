# Copyright 2026 The DualBloch Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Two-qubit dual Bloch sphere simulator.

States are passed as state text ("psi-", "1,0,0,1") or as four complex
amplitudes in the basis order (uu, ud, du, dd). Angles are in units of pi.
"""

from ._core import (
    Error,
    InvalidArgument,
    InvalidScene,
    NotStabilizer,
    ParseError,
    classify,
    cnot_trace,
    concurrence,
    eigenplanes,
    fidelity,
    format_state,
    parse_state,
    plane_of,
    render_svg,
    rotate,
    scene_json,
    stabilizer_census,
    stabilizer_graph_json,
    state_from_scene_json,
    verify_rules,
)

__all__ = [
    "Error",
    "InvalidArgument",
    "InvalidScene",
    "NotStabilizer",
    "ParseError",
    "classify",
    "cnot_trace",
    "concurrence",
    "eigenplanes",
    "fidelity",
    "format_state",
    "parse_state",
    "plane_of",
    "render_svg",
    "rotate",
    "scene_json",
    "stabilizer_census",
    "stabilizer_graph_json",
    "state_from_scene_json",
    "verify_rules",
]
