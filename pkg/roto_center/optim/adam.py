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

from typing import Optional

import torch

from .base import BaseOptimizer
from .gradient import parameter_shift_gradient
from .stopping import StoppingCriterion
from .trace import OptimizerTrace
from ..circuit import Circuit
from ..config import AdamConfig, EstimatorConfig
from ..estimator import Estimator, EvalCounter

# sampling stream of the uncounted per-step energy monitor
MONITOR_STREAM = 0x4d4f4e


class Adam(BaseOptimizer):
    """ Adam over parameter-shift gradients.

    The angles live in a float64 tensor driven by :py:class:`torch.optim.Adam`; each step
    sets ``.grad`` from :py:func:`parameter_shift_gradient` (``2 D`` evaluations). The energy
    recorded per step comes from an uncounted monitor estimator, so the trace's evaluation
    column only holds gradient costs.
    """

    _CONFIG_TYPE = AdamConfig
    name = "adam"

    def minimize(self, circuit : Circuit, estimator : Estimator, stop : Optional[StoppingCriterion] = None, seed : int = 0) -> OptimizerTrace:
        work, trace, stop = self._start(circuit, estimator, stop)
        monitor = estimator.monitor(MONITOR_STREAM)
        params = torch.tensor(work.angles, dtype=torch.float64, requires_grad=True)
        optimizer = torch.optim.Adam(
            [params],
            lr = self.config.lr,
            betas = (self.config.beta1, self.config.beta2),
            eps = self.config.eps,
        )
        step = 0
        while True:
            optimizer.zero_grad()
            params.grad = parameter_shift_gradient(work, estimator)
            optimizer.step()
            work.set_angles(params.detach().tolist())
            self._record(trace, work, estimator, step, -1, monitor.energy(work))
            if stop.check_update(trace):
                return self._finish(trace, work, stop)
            trace.end_cycle()
            if stop.check_cycle(trace):
                return self._finish(trace, work, stop)
            step += 1


def adam(circuit : Circuit,
         objective,
         config : Optional[EstimatorConfig] = None,
         stop : Optional[StoppingCriterion] = None,
         learning_rate : float = 0.05,
         seed : int = 0,
         counter : Optional[EvalCounter] = None,
        ) -> OptimizerTrace:
    """ Run :py:class:`Adam` with the given learning rate and default moment decays. """
    estimator = Estimator(objective, config, counter)
    return Adam(AdamConfig(lr=learning_rate)).minimize(circuit, estimator, stop, seed)
