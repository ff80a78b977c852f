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

from typing import Tuple

import torch

from .pauli_string import PauliString
from ..qstate import DTYPE, StateVector
from ..errors import SizeError


def word_action(word : PauliString) -> Tuple[torch.Tensor, torch.Tensor]:
    r""" Sparse action of a Pauli word on the computational basis.

    Every word maps a basis state to a single basis state up to a phase,
    :math:`P |b\rangle = \text{phase}[b]\, |\text{flip}[b]\rangle`, with
    ``flip[b] = b ^ x_mask`` and ``phase[b] = i^{n_Y} (-1)^{|b \wedge z_mask|}``.

    Return:
        (flip, phase): a long tensor and a complex tensor, both of length ``2**n``.
    """
    n = word.num_qubits
    idx = torch.arange(1 << n)
    flip = idx ^ word.x_mask
    parity = torch.zeros_like(idx)
    z_mask = word.z_mask
    for q in range(n):
        if (z_mask >> q) & 1:
            parity ^= (idx >> q) & 1
    phase = (1 - 2 * parity).to(DTYPE) * (1j ** word.num_y)
    return flip, phase


def expectation_of_word(state : StateVector, word : PauliString) -> float:
    r""" :math:`\langle \psi | P | \psi \rangle` for a single Pauli word.

    Args:
        state (StateVector): the state :math:`\psi`.
        word (PauliString): a word with as many letters as the state has qubits.

    Return:
        float: the expectation value, real and inside ``[-1, 1]``.
    """
    if isinstance(word, str):
        word = PauliString(word)
    if word.num_qubits != state.num_qubits:
        raise SizeError(f"word {word} has {word.num_qubits} letters, state has {state.num_qubits} qubits")
    if word.is_identity:
        return 1.0
    flip, phase = word_action(word)
    psi = state.amplitudes
    value = torch.sum(psi[flip].conj() * phase * psi).real.item()
    return min(1.0, max(-1.0, value))
