# Copyright 2026 The railswap developers
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

"""Linear-optical simulation of dual-rail photonic swap gates."""

from railswap._core import (
    Error,
    logical_gate,
    measurement_stats,
    mismatch_sweep,
    network_cost,
    overhead_report,
    permanent,
    route_netlist,
    simulate,
    swap_gate_matrix,
    synthesize,
    transition_amplitude,
    u_crossing,
    u_directional_coupler,
    u_mzi,
    u_phase_shifter,
    u_rbs,
)

__version__ = "0.1.0"

__all__ = [
    "Error",
    "logical_gate",
    "measurement_stats",
    "mismatch_sweep",
    "network_cost",
    "overhead_report",
    "permanent",
    "route_netlist",
    "simulate",
    "swap_gate_matrix",
    "synthesize",
    "transition_amplitude",
    "u_crossing",
    "u_directional_coupler",
    "u_mzi",
    "u_phase_shifter",
    "u_rbs",
]
