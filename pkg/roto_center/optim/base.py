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

import os
import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .stopping import StoppingCriterion, MaxCycles
from .trace import OptimizerTrace, StepRecord
from ..circuit import Circuit, Generator
from ..config import Config
from ..estimator import Estimator
from ..errors import ConfigError, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UpdateResult:
    """ Outcome of one coordinate update. ``evaluations`` is what the update spent. """

    generator : Generator
    angle : float
    energy : float
    evaluations : int
    flat : bool = False
    fallback : bool = False


class BaseOptimizer:
    """ Common driver of the optimizers.

    Subclasses set ``_CONFIG_TYPE`` and implement :py:meth:`minimize`. An optimizer never
    touches the caller's circuit: it works on a copy, which ends up in
    ``trace.final_circuit``.
    """

    _CONFIG_TYPE = Config
    name = "base"

    def __init__(self, config : Optional[Config] = None):
        if config is None:
            config = self._CONFIG_TYPE()
        if not isinstance(config, self._CONFIG_TYPE):
            raise ConfigError(f"{type(self).__name__} needs a {self._CONFIG_TYPE.__name__}, got {type(config).__name__}")
        self.config = config

    @classmethod
    def from_json_file(cls, json_file : Union[str, os.PathLike], **kwargs):
        config = cls._CONFIG_TYPE.from_json_file(json_file, **kwargs)
        return cls(config)

    def minimize(self, circuit : Circuit, estimator : Estimator, stop : Optional[StoppingCriterion] = None, seed : int = 0) -> OptimizerTrace:
        raise NotImplementedError

    def _start(self, circuit : Circuit, estimator : Estimator, stop : Optional[StoppingCriterion]) -> Tuple[Circuit, OptimizerTrace, StoppingCriterion]:
        if circuit.num_parameters == 0:
            raise ValidationError("the circuit has no rotation gates to optimize")
        work = circuit.copy()
        trace = OptimizerTrace(self.name, estimator.exact_energy(work), estimator.evaluations)
        trace.initial_generators = [str(g) for g in work.generators]
        return work, trace, MaxCycles(100) if stop is None else stop

    def _record(self, trace : OptimizerTrace, work : Circuit, estimator : Estimator, cycle : int, gate_index : int,
                energy : float, generator : Optional[str] = None, flat : bool = False, fallback : bool = False):
        if estimator.exact_mode:
            exact = energy
        elif estimator.config.track_exact:
            exact = estimator.exact_energy(work)
        else:
            exact = None
        trace.record(StepRecord(
            cycle = cycle,
            gate_index = gate_index,
            cumulative_evals = estimator.evaluations,
            energy = energy,
            exact_energy = exact,
            generator = generator,
            flat = flat,
            fallback = fallback,
        ), work)

    def _finish(self, trace : OptimizerTrace, work : Circuit, stop : StoppingCriterion) -> OptimizerTrace:
        trace.finish(work, stop.reason)
        logger.info("%s stopped after %d cycles and %d evaluations (%s), best energy %.10g",
                    self.name, trace.cycles, trace.evaluations, trace.stop_reason, trace.best_energy)
        return trace


class CoordinateOptimizer(BaseOptimizer):
    """ Sweeps the rotation gates in order ``d = 0 .. D-1``, one closed-form update each. """

    def update(self, work : Circuit, d : int, estimator : Estimator, known_energy : Optional[float], rng) -> UpdateResult:
        raise NotImplementedError

    def reuses_energy(self) -> bool:
        return False

    def _rng(self, seed : int):
        raise NotImplementedError

    def minimize(self, circuit : Circuit, estimator : Estimator, stop : Optional[StoppingCriterion] = None, seed : int = 0) -> OptimizerTrace:
        """ Run full cycles over the rotation gates until ``stop`` fires.

        Args:
            circuit (Circuit): the starting circuit, left untouched.
            estimator (Estimator): objective, estimation mode and evaluation counter.
            stop (StoppingCriterion, optional): defaults to 100 cycles.
            seed (int, optional): seed of the optimizer's own random choices. Defaults to 0.
        """
        work, trace, stop = self._start(circuit, estimator, stop)
        rng = self._rng(seed)
        known = None
        cycle = 0
        while True:
            for d in range(work.num_parameters):
                result = self.update(work, d, estimator, known, rng)
                known = result.energy if self.reuses_energy() else None
                self._record(trace, work, estimator, cycle, d, result.energy,
                             generator=str(result.generator), flat=result.flat, fallback=result.fallback)
                if stop.check_update(trace):
                    return self._finish(trace, work, stop)
            trace.end_cycle()
            logger.debug("%s cycle %d: best energy %.10g after %d evaluations", self.name, cycle, trace.best_energy, trace.evaluations)
            if stop.check_cycle(trace):
                return self._finish(trace, work, stop)
            cycle += 1


def probe(work : Circuit, d : int, estimator : Estimator, prefix, angle : float, generator = None) -> float:
    """ Counted energy with rotation ``d`` set to ``(generator, angle)``; leaves the gate set that way. """
    work.set_gate(d, generator=generator, angle=angle)
    return estimator.energy(work, prefix)
