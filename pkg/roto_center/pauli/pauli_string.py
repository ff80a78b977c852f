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
from typing import Dict

import torch

from ..qstate.matrices import kron_word
from ..errors import ValidationError

PAULI_LETTERS = "IXYZ"


@dataclass(frozen=True)
class PauliString:
    """ A tensor product of single-qubit Pauli matrices.

    Letter ``k`` of :py:attr:`letters` acts on qubit ``k`` (the least significant bit of the
    basis index), so ``PauliString("ZX")`` is :math:`X_1 Z_0`.

    Args:
        letters (str): a non-empty word over ``IXYZ``.
    """

    letters : str

    def __post_init__(self):
        if not isinstance(self.letters, str) or len(self.letters) == 0:
            raise ValidationError(f"a Pauli word must be a non-empty string, got {self.letters!r}")
        bad = [c for c in self.letters if c not in PAULI_LETTERS]
        if bad:
            raise ValidationError(f"invalid Pauli letter {bad[0]!r} in {self.letters!r}")

    @classmethod
    def from_sparse(cls, num_qubits : int, ops : Dict[int, str]) -> "PauliString":
        """ Build a word from ``{qubit: letter}``; unspecified qubits get ``I``. """
        letters = ["I"] * num_qubits
        for q, letter in ops.items():
            if not 0 <= q < num_qubits:
                raise ValidationError(f"qubit {q} out of range for a {num_qubits}-qubit word")
            letters[q] = letter
        return cls("".join(letters))

    @property
    def num_qubits(self) -> int:
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return self.letters

    @property
    def is_identity(self) -> bool:
        return all(c == "I" for c in self.letters)

    @property
    def support(self):
        return tuple(q for q, c in enumerate(self.letters) if c != "I")

    @property
    def x_mask(self) -> int:
        """ Bits flipped by the word (its X and Y letters). """
        return sum(1 << q for q, c in enumerate(self.letters) if c in "XY")

    @property
    def z_mask(self) -> int:
        """ Bits that contribute a sign (its Z and Y letters). """
        return sum(1 << q for q, c in enumerate(self.letters) if c in "ZY")

    @property
    def num_y(self) -> int:
        return self.letters.count("Y")

    def matrix(self) -> torch.Tensor:
        return kron_word(self.letters)
