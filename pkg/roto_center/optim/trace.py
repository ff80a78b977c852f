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

from dataclasses import dataclass, asdict
from typing import Any, Dict, List, Optional

from ..circuit import Circuit
from ..errors import ValidationError


@dataclass(frozen=True)
class StepRecord:
    """ One optimizer update.

    ``gate_index`` is the rotation that was updated, or -1 for steps that move every angle
    at once. ``cumulative_evals`` is the evaluation counter right after the update.
    ``flat`` marks a coordinate whose sinusoid was below the flat threshold, ``fallback`` a
    reuse update that had to take the full-cost path.
    """

    cycle : int
    gate_index : int
    cumulative_evals : int
    energy : float
    exact_energy : Optional[float] = None
    generator : Optional[str] = None
    flat : bool = False
    fallback : bool = False

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class OptimizerTrace:
    """ Everything an optimizer run produced.

    The trace doubles as the progress object handed to the stopping criteria.

    Args:
        optimizer (str): name of the optimizer.
        initial_energy (float): noiseless energy of the starting circuit (not counted).
        start_evals (int, optional): counter value when the run started. Defaults to 0.
    """

    def __init__(self, optimizer : str, initial_energy : float, start_evals : int = 0):
        self.optimizer = optimizer
        self.initial_energy = float(initial_energy)
        self.start_evals = int(start_evals)
        self.records : List[StepRecord] = []
        self.cycle_bests : List[float] = []
        self.best_energy : Optional[float] = None
        self.best_exact : Optional[float] = None
        self.best_parameters : Optional[List[float]] = None
        self.best_generators : Optional[List[str]] = None
        self.final_circuit : Optional[Circuit] = None
        self.stop_reason : Optional[str] = None
        self.initial_generators : List[str] = []

    def record(self, record : StepRecord, circuit : Circuit):
        if self.records and record.cumulative_evals <= self.records[-1].cumulative_evals:
            raise ValidationError("cumulative evaluations must strictly increase along a trace")
        self.records.append(record)
        if self.best_energy is None or record.energy < self.best_energy:
            self.best_energy = record.energy
            self.best_parameters = circuit.angles
            self.best_generators = [str(g) for g in circuit.generators]
        if record.exact_energy is not None and (self.best_exact is None or record.exact_energy < self.best_exact):
            self.best_exact = record.exact_energy

    def end_cycle(self):
        self.cycle_bests.append(self.best_energy if self.best_energy is not None else self.initial_energy)

    def finish(self, circuit : Circuit, reason : str):
        self.final_circuit = circuit
        self.stop_reason = reason

    @property
    def cycles(self) -> int:
        """ Completed cycles. """
        return len(self.cycle_bests)

    @property
    def evaluations(self) -> int:
        """ Evaluations spent by this run. """
        return (self.records[-1].cumulative_evals if self.records else self.start_evals) - self.start_evals

    @property
    def energies(self) -> List[float]:
        return [r.energy for r in self.records]

    @property
    def exact_energies(self) -> List[Optional[float]]:
        return [r.exact_energy for r in self.records]

    @property
    def flat_updates(self) -> int:
        return sum(1 for r in self.records if r.flat)

    @property
    def fallbacks(self) -> int:
        return sum(1 for r in self.records if r.fallback)

    def evaluations_to(self, energy : float, use_exact : bool = True) -> Optional[int]:
        """ Cumulative evaluations of the first record at or below ``energy``, ``None`` if never reached. """
        for r in self.records:
            value = r.exact_energy if use_exact and r.exact_energy is not None else r.energy
            if value <= energy:
                return r.cumulative_evals - self.start_evals
        return None

    def generator_changes_per_cycle(self) -> List[int]:
        """ How many gates switched generator in each cycle, for structure-learning runs. """
        last : Dict[int, str] = dict(enumerate(self.initial_generators))
        changes : List[int] = []
        for r in self.records:
            if r.generator is None or r.gate_index < 0:
                continue
            while len(changes) <= r.cycle:
                changes.append(0)
            previous = last.get(r.gate_index)
            if previous is not None and previous != r.generator:
                changes[r.cycle] += 1
            last[r.gate_index] = r.generator
        return changes

    def summary(self) -> Dict[str, Any]:
        return {
            "optimizer": self.optimizer,
            "initial_energy": self.initial_energy,
            "best_energy": self.best_energy,
            "best_exact_energy": self.best_exact,
            "cycles": self.cycles,
            "evaluations": self.evaluations,
            "flat_updates": self.flat_updates,
            "fallbacks": self.fallbacks,
            "stop_reason": self.stop_reason,
            "best_parameters": self.best_parameters,
            "best_generators": self.best_generators,
        }

    def __len__(self):
        return len(self.records)

    def __repr__(self):
        return (f"OptimizerTrace(optimizer={self.optimizer!r}, records={len(self.records)}, "
                f"cycles={self.cycles}, best_energy={self.best_energy})")
