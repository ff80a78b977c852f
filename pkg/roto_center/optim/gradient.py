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

import math
import torch

from .base import probe
from ..circuit import Circuit
from ..estimator import Estimator

HALF_PI = 0.5 * math.pi


def parameter_shift_gradient(circuit : Circuit, estimator : Estimator) -> torch.Tensor:
    r""" Exact-in-expectation gradient of the energy with respect to every rotation angle.

    Since :math:`E(\theta_d) = A \sin(\theta_d + B) + C`,
    :math:`\partial E / \partial \theta_d = (E(\theta_d + \pi/2) - E(\theta_d - \pi/2)) / 2`.
    Costs ``2 D`` evaluations. The circuit is restored before returning.

    Return:
        :obj:`torch.Tensor` of shape ``(D,)``, float64.
    """
    work = circuit.copy()
    grad = torch.zeros(work.num_parameters, dtype=torch.float64)
    for d in range(work.num_parameters):
        theta = work.rotation(d).angle
        prefix = estimator.prefix(work, d)
        e_plus = probe(work, d, estimator, prefix, theta + HALF_PI)
        e_minus = probe(work, d, estimator, prefix, theta - HALF_PI)
        work.set_gate(d, angle=theta)
        grad[d] = 0.5 * (e_plus - e_minus)
    return grad
