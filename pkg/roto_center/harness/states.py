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

import numpy as np
import torch

from ..qstate import StateVector, MAX_QUBITS, inner_product
from ..utils.rng import stream
from ..errors import SizeError

# rng stream of random target states
HAAR_STREAM = 0x48414152


def trace_distance_pure(a : StateVector, b : StateVector) -> float:
    r""" Trace distance of two pure states, :math:`\sqrt{1 - |\langle a | b \rangle|^2}`. """
    fidelity = abs(inner_product(a, b)) ** 2
    return math.sqrt(max(0.0, 1.0 - fidelity))


def haar_random_state(n : int, seed : int = 0) -> StateVector:
    """ Uniformly random pure state: a normalized vector of complex standard normals. """
    if not isinstance(n, int) or n < 1 or n > MAX_QUBITS:
        raise SizeError(f"qubit count must lie in [1, {MAX_QUBITS}], got {n!r}")
    rng = stream(seed, HAAR_STREAM)
    dim = 1 << n
    amplitudes = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    amplitudes /= np.linalg.norm(amplitudes)
    return StateVector(torch.from_numpy(amplitudes))
