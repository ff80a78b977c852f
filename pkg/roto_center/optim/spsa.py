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

from typing import Optional, Tuple

import numpy as np

from .base import BaseOptimizer
from .adam import MONITOR_STREAM
from .stopping import StoppingCriterion
from .trace import OptimizerTrace
from ..circuit import Circuit
from ..config import EstimatorConfig, SPSAConfig
from ..estimator import Estimator, EvalCounter
from ..utils.rng import stream

# rng stream of the perturbation vectors
SPSA_STREAM = 0x53505341


class SPSA(BaseOptimizer):
    r""" Simultaneous perturbation stochastic approximation.

    Step ``k`` draws :math:`\Delta \in \{-1, +1\}^D`, measures
    :math:`E_\pm = E(\theta \pm c_k \Delta)` (2 evaluations) and moves
    :math:`\theta \leftarrow \theta - a_k \frac{E_+ - E_-}{2 c_k} \Delta`, with
    :math:`a_k = a / (k + 1 + A)^\alpha` and :math:`c_k = c / (k + 1)^\gamma`.
    """

    _CONFIG_TYPE = SPSAConfig
    name = "spsa"

    def gains(self, k : int) -> Tuple[float, float]:
        cfg = self.config
        a_k = cfg.a / (k + 1 + cfg.stability) ** cfg.alpha
        c_k = cfg.c / (k + 1) ** cfg.gamma
        return a_k, c_k

    def minimize(self, circuit : Circuit, estimator : Estimator, stop : Optional[StoppingCriterion] = None, seed : int = 0) -> OptimizerTrace:
        work, trace, stop = self._start(circuit, estimator, stop)
        monitor = estimator.monitor(MONITOR_STREAM)
        rng = stream(seed, SPSA_STREAM)
        theta = np.array(work.angles, dtype=np.float64)
        probe = work.copy()
        step = 0
        while True:
            a_k, c_k = self.gains(step)
            delta = 2.0 * rng.integers(0, 2, size=theta.shape[0]) - 1.0
            e_plus = estimator.energy(probe.set_angles(theta + c_k * delta))
            e_minus = estimator.energy(probe.set_angles(theta - c_k * delta))
            theta = theta - a_k * (e_plus - e_minus) / (2.0 * c_k) * delta
            work.set_angles(theta)
            self._record(trace, work, estimator, step, -1, monitor.energy(work))
            if stop.check_update(trace):
                return self._finish(trace, work, stop)
            trace.end_cycle()
            if stop.check_cycle(trace):
                return self._finish(trace, work, stop)
            step += 1


def spsa(circuit : Circuit,
         objective,
         config : Optional[EstimatorConfig] = None,
         stop : Optional[StoppingCriterion] = None,
         hyperparams : Optional[SPSAConfig] = None,
         seed : int = 0,
         counter : Optional[EvalCounter] = None,
        ) -> OptimizerTrace:
    """ Run :py:class:`SPSA`; ``hyperparams`` defaults to the standard gain constants. """
    estimator = Estimator(objective, config, counter)
    return SPSA(hyperparams).minimize(circuit, estimator, stop, seed)
