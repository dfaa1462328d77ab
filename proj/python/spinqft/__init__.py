# Copyright 2026 The spinqft Authors
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

"""QFT synthesis, LNN routing and time-cost analysis for nuclear-spin registers."""

from ._spinqft import (
    CapacityError,
    Circuit,
    InfeasibleError,
    InvalidArgument,
    ParseError,
    QubitIndexError,
    build_aqft,
    build_qft,
    circuit_cost,
    circuit_unitary,
    dft_matrix,
    equal_up_to_global_phase,
    intensity_requirement,
    lower_circuit,
    max_feasible_qubits,
    qft_cost_closed_form,
    route_lnn,
    swap_overhead_report,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
