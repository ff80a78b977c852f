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

from dataclasses import dataclass
from typing import Optional, Union

from .counter import EvalCounter
from .objective import Objective, HamiltonianObjective, OverlapObjective
from ..circuit import Circuit
from ..config import EstimatorConfig
from ..pauli import Hamiltonian
from ..qstate import StateVector, zero_state
from ..utils.rng import derive_seed
from ..errors import SizeError


@dataclass(frozen=True)
class CircuitPrefix:
    """ State reached after the first ``position`` gates of a circuit. """

    state : StateVector
    position : int


@dataclass(frozen=True)
class Estimate:
    """ One counted energy estimate.

    ``exact`` is the noiseless value: equal to ``energy`` in exact mode, filled in sampled
    mode only when the configuration tracks it, ``None`` otherwise.
    """

    energy : float
    exact : Optional[float]
    eval_index : int


def as_objective(objective : Union[Objective, Hamiltonian, StateVector]) -> Objective:
    if isinstance(objective, Objective):
        return objective
    if isinstance(objective, Hamiltonian):
        return HamiltonianObjective(objective)
    if isinstance(objective, StateVector):
        return OverlapObjective(objective)
    raise TypeError(f"cannot build an objective from {type(objective).__name__}")


class Estimator:
    """ The single place where optimizers observe energies.

    Every call to :py:meth:`estimate` (and :py:meth:`energy`) runs the circuit, increments the
    counter by exactly one and, in sampled mode, draws its shots from streams keyed on
    ``(config.seed, eval_index, term)`` where ``eval_index`` is the counter value before the
    call. Replaying the same sequence of calls therefore replays the same numbers.

    Args:
        objective (Objective, Hamiltonian or StateVector): what to measure; a state means the
            overlap objective with that target.
        config (EstimatorConfig, optional): exact or sampled mode. Defaults to exact.
        counter (EvalCounter, optional): the evaluation counter. A fresh one is created when omitted.
        initial (StateVector, optional): input state of the circuits. Defaults to ``|0...0>``.
    """

    def __init__(self, objective, config : EstimatorConfig = None, counter : EvalCounter = None, initial : StateVector = None):
        self.objective = as_objective(objective)
        self.config = EstimatorConfig() if config is None else config
        self.counter = EvalCounter() if counter is None else counter
        self.initial = zero_state(self.objective.num_qubits) if initial is None else initial
        self.objective.check_state(self.initial)

    @property
    def num_qubits(self) -> int:
        return self.objective.num_qubits

    @property
    def exact_mode(self) -> bool:
        return self.config.exact

    @property
    def flat_threshold(self) -> float:
        return self.config.effective_flat_threshold

    @property
    def evaluations(self) -> int:
        return self.counter.count

    def _check(self, circuit : Circuit):
        if circuit.num_qubits != self.num_qubits:
            raise SizeError(f"circuit has {circuit.num_qubits} qubits, objective acts on {self.num_qubits}")

    def prefix(self, circuit : Circuit, d : int) -> CircuitPrefix:
        """ Uncounted simulation of every gate before rotation ``d``. """
        self._check(circuit)
        position = circuit.position(d)
        state = self.initial
        for gate in circuit.gates[:position]:
            state = gate.apply(state)
        return CircuitPrefix(state, position)

    def output_state(self, circuit : Circuit, prefix : Optional[CircuitPrefix] = None) -> StateVector:
        self._check(circuit)
        if prefix is None:
            return circuit.evaluate(self.initial)
        return circuit.evaluate(prefix.state, prefix.position)

    def estimate(self, circuit : Circuit, prefix : Optional[CircuitPrefix] = None) -> Estimate:
        """ One counted energy estimate of ``circuit``.

        Args:
            circuit (Circuit): the circuit to run.
            prefix (CircuitPrefix, optional): cached state of the leading gates; only valid if
                those gates are unchanged since the prefix was taken.
        """
        state = self.output_state(circuit, prefix)
        eval_index = self.counter.increment()
        if self.config.exact:
            value = self.objective.exact(state)
            return Estimate(value, value, eval_index)
        value = self.objective.sampled(state, self.config.shots_per_term, self.config.seed, eval_index)
        exact = self.objective.exact(state) if self.config.track_exact else None
        return Estimate(value, exact, eval_index)

    def energy(self, circuit : Circuit, prefix : Optional[CircuitPrefix] = None) -> float:
        return self.estimate(circuit, prefix).energy

    def exact_energy(self, circuit : Circuit) -> float:
        """ Noiseless energy, not counted. Used for bookkeeping only. """
        return self.objective.exact(self.output_state(circuit))

    def monitor(self, stream_id : int = 1) -> "Estimator":
        """ A copy with its own counter and an independent sampling stream, for uncounted progress records. """
        config = EstimatorConfig.from_dict(self.config.to_dict(), seed=derive_seed(self.config.seed, stream_id))
        return Estimator(self.objective, config, EvalCounter(), self.initial)


def energy(circuit : Circuit, hamiltonian : Hamiltonian, config : EstimatorConfig = None, counter : EvalCounter = None) -> float:
    r""" :math:`\langle M \rangle` of ``circuit`` applied to ``|0...0>``; one evaluation. """
    return Estimator(HamiltonianObjective(hamiltonian), config, counter).energy(circuit)


def state_overlap_energy(circuit : Circuit, target : StateVector, config : EstimatorConfig = None, counter : EvalCounter = None) -> float:
    r""" :math:`-|\langle \phi | \psi \rangle|^2` of ``circuit`` applied to ``|0...0>``; one evaluation. """
    return Estimator(OverlapObjective(target), config, counter).energy(circuit)
