# coding=utf-8
# Copyright 2022 The RotoCenter Authors. All rights reserved.
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


from .errors import RotoCenterError, SizeError, QubitIndexError, GateIndexError, ValidationError, ConfigError, HamiltonianParseError
from .qstate import StateVector, zero_state, inner_product
from .pauli import PauliString, Hamiltonian, build_heisenberg, parse_hamiltonian, load_hamiltonian, exact_spectrum_bounds
from .circuit import Circuit, PauliGenerator, ArbitraryAxis, Conjugated, X, Y, Z, build_layered_ansatz, build_circuit15
from .estimator import Estimator, EvalCounter, energy, state_overlap_energy
from .sinusoid import fit, optimal_angle, extrapolated_minimum, SinusoidFit, ProbeTriple
from .optim import Rotosolve, Rotoselect, Adam, SPSA, rotosolve, rotoselect, adam, spsa, parameter_shift_gradient
from .arguments import get_args
