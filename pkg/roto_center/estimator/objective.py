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

import numpy as np
import torch

from ..pauli import Hamiltonian
from ..qstate import StateVector
from ..utils.rng import stream
from ..errors import SizeError


class Objective:
    """ An operator whose expectation value the optimizers minimize.

    ``exact`` returns the expectation on a state; ``sampled`` returns a finite-shot estimate
    whose randomness is fully determined by ``(seed, eval_index)``.
    """

    num_qubits : int

    def check_state(self, state : StateVector):
        if state.num_qubits != self.num_qubits:
            raise SizeError(f"objective acts on {self.num_qubits} qubits, state has {state.num_qubits}")

    def exact(self, state : StateVector) -> float:
        raise NotImplementedError

    def sampled(self, state : StateVector, shots : int, seed : int, eval_index : int) -> float:
        raise NotImplementedError


class HamiltonianObjective(Objective):
    r""" :math:`\langle M \rangle` for a Pauli-sum Hamiltonian.

    In sampled mode every non-identity term :math:`M_i` gets ``shots`` simulated
    :math:`\pm 1` outcomes, drawn from the exact outcome distribution
    :math:`P(+1) = (1 + \langle M_i \rangle) / 2` on the stream ``(seed, eval_index, i)``.
    Identity terms contribute their weight with no noise.
    """

    def __init__(self, hamiltonian : Hamiltonian):
        self.hamiltonian = hamiltonian
        self.num_qubits = hamiltonian.num_qubits

    def exact(self, state : StateVector) -> float:
        return self.hamiltonian.expectation(state)

    def term_means(self, state : StateVector, shots : int, seed : int, eval_index : int) -> np.ndarray:
        values = self.hamiltonian.term_expectations(state).numpy()
        identity = self.hamiltonian.identity_mask.numpy()
        means = np.ones_like(values)
        for t, value in enumerate(values):
            if identity[t]:
                continue
            p = min(1.0, max(0.0, 0.5 * (1.0 + value)))
            k = stream(seed, eval_index, t).binomial(shots, p)
            means[t] = (2.0 * k - shots) / shots
        return means

    def sampled(self, state : StateVector, shots : int, seed : int, eval_index : int) -> float:
        means = self.term_means(state, shots, seed, eval_index)
        return float(np.dot(self.hamiltonian.weights.numpy(), means))

    def __repr__(self):
        return f"HamiltonianObjective({self.hamiltonian!r})"


class OverlapObjective(Objective):
    r""" :math:`M = -|\phi\rangle\langle\phi|`, whose minimum -1 is reached at the target state.

    A sampled estimate is minus the success fraction of ``shots`` Bernoulli trials with
    probability :math:`|\langle \phi | \psi \rangle|^2`.
    """

    def __init__(self, target : StateVector):
        self.target = target
        self.num_qubits = target.num_qubits

    def fidelity(self, state : StateVector) -> float:
        self.check_state(state)
        overlap = torch.vdot(self.target.amplitudes, state.amplitudes)
        return min(1.0, (overlap.abs() ** 2).item())

    def exact(self, state : StateVector) -> float:
        return -self.fidelity(state)

    def sampled(self, state : StateVector, shots : int, seed : int, eval_index : int) -> float:
        p = self.fidelity(state)
        k = stream(seed, eval_index, 0).binomial(shots, p)
        return -k / shots

    def __repr__(self):
        return f"OverlapObjective(num_qubits={self.num_qubits})"
