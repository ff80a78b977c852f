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

# Storage and computational precision of states and operators.
DTYPE = torch.complex128

PAULI_ENTRIES = {
    "I": ((1, 0), (0, 1)),
    "X": ((0, 1), (1, 0)),
    "Y": ((0, -1j), (1j, 0)),
    "Z": ((1, 0), (0, -1)),
}

PAULI_MATRICES = {
    letter: torch.tensor(entries, dtype=DTYPE) for letter, entries in PAULI_ENTRIES.items()
}

def rotation_matrix(generator : torch.Tensor, theta : float) -> torch.Tensor:
    r""" :math:`\exp(-i \theta H / 2) = \cos(\theta/2) I - i \sin(\theta/2) H`, valid whenever :math:`H^2 = I`. """
    dim = generator.shape[0]
    c = math.cos(theta / 2)
    s = math.sin(theta / 2)
    return c * torch.eye(dim, dtype=DTYPE) - 1j * s * generator

def rotation_entries(entries, theta : float):
    """ Same as :py:func:`rotation_matrix` for a 2x2 generator given as nested python numbers. """
    c = math.cos(theta / 2)
    s = math.sin(theta / 2)
    (h00, h01), (h10, h11) = entries
    return (
        (c - 1j * s * h00, -1j * s * h01),
        (-1j * s * h10, c - 1j * s * h11),
    )

def kron_word(letters) -> torch.Tensor:
    """ Dense matrix of a Pauli word whose letter ``k`` acts on qubit ``k``.

    Qubit 0 is the least significant bit of the basis index, so the Kronecker product runs
    from the last letter to the first.
    """
    out = torch.ones((1, 1), dtype=DTYPE)
    for letter in reversed(letters):
        out = torch.kron(out, PAULI_MATRICES[letter])
    return out
