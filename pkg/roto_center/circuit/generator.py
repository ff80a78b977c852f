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
from dataclasses import dataclass, field
from typing import Tuple, Union

import torch

from ..qstate import DTYPE, check_axis
from ..qstate.matrices import PAULI_ENTRIES
from ..qstate.kernel import axis_entries
from ..pauli import PauliString
from ..errors import ValidationError

SQUARE_TOLERANCE = 1e-9


class Generator:
    r""" Hermitian single-qubit operator :math:`H` with :math:`H^2 = I`, the generator of
    :math:`\exp(-i \theta H / 2)`.

    Subclasses expose :py:attr:`entries`, the 2x2 matrix as nested python numbers, which the
    kernel turns into the rotation directly.
    """

    entries = None

    @property
    def label(self) -> str:
        raise NotImplementedError

    @property
    def is_pauli(self) -> bool:
        return False

    def matrix(self) -> torch.Tensor:
        return torch.tensor(self.entries, dtype=DTYPE)

    def to_text(self) -> str:
        raise ValidationError(f"generator {self.label} has no text form")

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class PauliGenerator(Generator):
    """ One of ``X``, ``Y``, ``Z``. """

    letter : str

    def __post_init__(self):
        if self.letter not in ("X", "Y", "Z"):
            raise ValidationError(f"a Pauli generator is one of X, Y, Z, got {self.letter!r}")

    @property
    def entries(self):
        return PAULI_ENTRIES[self.letter]

    @property
    def label(self) -> str:
        return self.letter

    @property
    def is_pauli(self) -> bool:
        return True

    def to_text(self) -> str:
        return self.letter


X = PauliGenerator("X")
Y = PauliGenerator("Y")
Z = PauliGenerator("Z")

PAULI_GENERATORS = (X, Y, Z)


@dataclass(frozen=True)
class ArbitraryAxis(Generator):
    r""" :math:`c_x X + c_y Y + c_z Z` for a unit vector :math:`(c_x, c_y, c_z)`. """

    cx : float
    cy : float
    cz : float

    def __post_init__(self):
        axis = check_axis((self.cx, self.cy, self.cz))
        object.__setattr__(self, "cx", axis[0])
        object.__setattr__(self, "cy", axis[1])
        object.__setattr__(self, "cz", axis[2])

    @classmethod
    def from_vector(cls, axis) -> "ArbitraryAxis":
        cx, cy, cz = axis
        return cls(cx, cy, cz)

    @property
    def axis(self) -> Tuple[float, float, float]:
        return (self.cx, self.cy, self.cz)

    @property
    def entries(self):
        return axis_entries(self.axis)

    @property
    def label(self) -> str:
        return f"AXIS({self.cx!r},{self.cy!r},{self.cz!r})"

    def to_text(self) -> str:
        return self.label


@dataclass(frozen=True, eq=False)
class Conjugated(Generator):
    r""" :math:`V P V^\dagger` for a single-letter Pauli word :math:`P` and a 2x2 unitary :math:`V`.

    Args:
        word (PauliString or str): the Pauli letter, ``I`` excluded.
        conjugator (:obj:`torch.Tensor` of shape ``(2, 2)``): the unitary :math:`V`.
    """

    word : PauliString
    conjugator : torch.Tensor = field(repr=False)

    def __post_init__(self):
        word = PauliString(self.word) if isinstance(self.word, str) else self.word
        if word.num_qubits != 1 or word.is_identity:
            raise ValidationError(f"a conjugated generator needs one non-identity letter, got {word}")
        v = torch.as_tensor(self.conjugator, dtype=DTYPE)
        if v.shape != (2, 2):
            raise ValidationError(f"conjugator must be 2x2, got {tuple(v.shape)}")
        eye = torch.eye(2, dtype=DTYPE)
        if (v.conj().T @ v - eye).abs().max().item() > SQUARE_TOLERANCE:
            raise ValidationError("conjugator is not unitary")
        h = v @ word.matrix() @ v.conj().T
        if (h @ h - eye).abs().max().item() > SQUARE_TOLERANCE:
            raise ValidationError("conjugated generator does not square to the identity")
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "conjugator", v)
        object.__setattr__(self, "_entries", tuple(tuple(complex(x) for x in row) for row in h.tolist()))

    @property
    def entries(self):
        return self._entries

    @property
    def label(self) -> str:
        return f"CONJ({self.word})"


def as_generator(value : Union[str, Generator]) -> Generator:
    if isinstance(value, Generator):
        return value
    if isinstance(value, str):
        return PauliGenerator(value)
    raise ValidationError(f"cannot interpret {value!r} as a generator")


def parse_generator(token : str) -> Generator:
    """ Inverse of :py:meth:`Generator.to_text`. """
    if token in ("X", "Y", "Z"):
        return PauliGenerator(token)
    if token.startswith("AXIS(") and token.endswith(")"):
        try:
            coords = [float(c) for c in token[5:-1].split(",")]
        except ValueError:
            raise ValidationError(f"malformed axis {token!r}") from None
        if len(coords) != 3 or not all(math.isfinite(c) for c in coords):
            raise ValidationError(f"malformed axis {token!r}")
        return ArbitraryAxis.from_vector(coords)
    raise ValidationError(f"unknown generator {token!r}")
