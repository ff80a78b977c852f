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

import torch

from .hamiltonian import Hamiltonian
from ..errors import SizeError, ValidationError

# Dense diagonalization cap.
MAX_SPECTRUM_QUBITS = 12


@dataclass(frozen=True)
class SpectrumBounds:
    """ Smallest and largest eigenvalue of a Hamiltonian. """

    e_min : float
    e_max : float

    def __post_init__(self):
        if self.e_min > self.e_max:
            raise ValidationError(f"e_min {self.e_min} exceeds e_max {self.e_max}")

    @property
    def width(self) -> float:
        return self.e_max - self.e_min

    def normalized_distance(self, energy : float) -> float:
        """ ``(energy - e_min) / (e_max - e_min)``; 0 for a trivial spectrum. """
        if self.width <= 0:
            return 0.0
        return (energy - self.e_min) / self.width

    def to_dict(self):
        return {"e_min": self.e_min, "e_max": self.e_max}


def exact_spectrum_bounds(ham : Hamiltonian, max_qubits : int = MAX_SPECTRUM_QUBITS) -> SpectrumBounds:
    """ Extreme eigenvalues by dense diagonalization.

    Args:
        ham (Hamiltonian): the operator.
        max_qubits (int, optional): refuse larger systems. Defaults to 12.
    """
    if ham.num_qubits > max_qubits:
        raise SizeError(f"dense diagonalization is capped at {max_qubits} qubits, got {ham.num_qubits}")
    eigvals = torch.linalg.eigvalsh(ham.to_dense())
    return SpectrumBounds(e_min=eigvals[0].item(), e_max=eigvals[-1].item())
