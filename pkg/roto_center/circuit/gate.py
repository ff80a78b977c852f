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
from typing import Tuple, Union

from .generator import Generator, as_generator
from ..qstate import StateVector, apply_fixed, apply_rotation
from ..utils.angles import wrap_angle
from ..errors import QubitIndexError, ValidationError

FIXED_KINDS = ("CZ", "CNOT")


@dataclass(frozen=True)
class FixedGate:
    """ A parameter-free entangler. For ``CNOT`` the qubits are ``(control, target)``. """

    kind : str
    qubits : Tuple[int, int]

    def __post_init__(self):
        if self.kind not in FIXED_KINDS:
            raise ValidationError(f"unknown fixed gate {self.kind!r}, expected one of {FIXED_KINDS}")
        qubits = tuple(int(q) for q in self.qubits)
        if len(qubits) != 2 or qubits[0] == qubits[1] or min(qubits) < 0:
            raise QubitIndexError(f"{self.kind} needs two distinct non-negative qubits, got {self.qubits}")
        object.__setattr__(self, "qubits", qubits)

    def apply(self, state : StateVector) -> StateVector:
        return apply_fixed(state, self)

    def to_text(self) -> str:
        return f"{self.kind} q{self.qubits[0]} q{self.qubits[1]}"


@dataclass(frozen=True)
class RotationGate:
    r""" :math:`U = \exp(-i \theta H / 2)` on one qubit; the angle is stored in (-pi, pi]. """

    qubit : int
    generator : Generator
    angle : float = 0.0

    def __post_init__(self):
        if int(self.qubit) < 0:
            raise QubitIndexError(f"qubit index must be non-negative, got {self.qubit}")
        object.__setattr__(self, "qubit", int(self.qubit))
        object.__setattr__(self, "generator", as_generator(self.generator))
        object.__setattr__(self, "angle", wrap_angle(self.angle))

    @property
    def qubits(self) -> Tuple[int]:
        return (self.qubit,)

    def replace(self, generator : Union[str, Generator, None] = None, angle : float = None) -> "RotationGate":
        return RotationGate(
            self.qubit,
            self.generator if generator is None else generator,
            self.angle if angle is None else angle,
        )

    def apply(self, state : StateVector) -> StateVector:
        return apply_rotation(state, self.qubit, self.generator, self.angle)

    def to_text(self) -> str:
        return f"ROT q{self.qubit} {self.generator.to_text()} {self.angle!r}"


Gate = Union[FixedGate, RotationGate]
