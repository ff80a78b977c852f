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

import re
from typing import Iterable, List, Optional, Sequence, Union

from .gate import FixedGate, RotationGate, Gate
from .generator import Generator, parse_generator
from ..qstate import StateVector, zero_state
from ..errors import GateIndexError, QubitIndexError, SizeError, ValidationError

_QUBIT = re.compile(r"^q(\d+)$")


class Circuit:
    """ Ordered list of gates acting on ``num_qubits`` qubits, applied first to last.

    The rotation gates are the optimizable coordinates. They are numbered
    ``d = 0 .. D-1`` in list order, independently of the fixed gates between them.

    A circuit is a mutable working value: :py:meth:`set_gate` changes it in place,
    :py:meth:`with_gate` returns a modified copy.

    Args:
        num_qubits (int): register size.
        gates (iterable of gates, optional): initial gate list.
    """

    def __init__(self, num_qubits : int, gates : Iterable[Gate] = ()):
        if not isinstance(num_qubits, int) or num_qubits < 1:
            raise SizeError(f"a circuit needs at least one qubit, got {num_qubits!r}")
        self.num_qubits = num_qubits
        self._gates : List[Gate] = []
        self._positions : List[int] = []
        for gate in gates:
            self.append(gate)

    def append(self, gate : Gate) -> "Circuit":
        if not isinstance(gate, (FixedGate, RotationGate)):
            raise ValidationError(f"not a gate: {gate!r}")
        for q in gate.qubits:
            if q >= self.num_qubits:
                raise QubitIndexError(f"gate {gate!r} touches qubit {q} of a {self.num_qubits}-qubit circuit")
        if isinstance(gate, RotationGate):
            self._positions.append(len(self._gates))
        self._gates.append(gate)
        return self

    def add_rotation(self, qubit : int, generator : Union[str, Generator], angle : float = 0.0) -> "Circuit":
        return self.append(RotationGate(qubit, generator, angle))

    def add_cz(self, a : int, b : int) -> "Circuit":
        return self.append(FixedGate("CZ", (a, b)))

    def add_cnot(self, control : int, target : int) -> "Circuit":
        return self.append(FixedGate("CNOT", (control, target)))

    @property
    def gates(self):
        return tuple(self._gates)

    def __len__(self):
        return len(self._gates)

    @property
    def num_parameters(self) -> int:
        """ Number ``D`` of rotation gates. """
        return len(self._positions)

    def position(self, d : int) -> int:
        """ Index in the gate list of rotation ``d``. """
        self._check_index(d)
        return self._positions[d]

    def rotation(self, d : int) -> RotationGate:
        return self._gates[self.position(d)]

    @property
    def rotations(self) -> List[RotationGate]:
        return [self._gates[p] for p in self._positions]

    @property
    def angles(self) -> List[float]:
        return [g.angle for g in self.rotations]

    @property
    def generators(self) -> List[Generator]:
        return [g.generator for g in self.rotations]

    @property
    def num_fixed(self) -> int:
        return len(self._gates) - len(self._positions)

    def _check_index(self, d : int):
        if not isinstance(d, int) or isinstance(d, bool) or not 0 <= d < len(self._positions):
            raise GateIndexError(f"rotation index {d!r} out of range for {len(self._positions)} rotations")

    def set_gate(self, d : int, generator : Union[str, Generator, None] = None, angle : Optional[float] = None) -> "Circuit":
        """ Replace the generator and/or angle of rotation ``d`` in place; the angle is wrapped to (-pi, pi]. """
        pos = self.position(d)
        self._gates[pos] = self._gates[pos].replace(generator=generator, angle=angle)
        return self

    def with_gate(self, d : int, generator : Union[str, Generator, None] = None, angle : Optional[float] = None) -> "Circuit":
        return self.copy().set_gate(d, generator, angle)

    def set_angles(self, angles : Sequence[float]) -> "Circuit":
        if len(angles) != self.num_parameters:
            raise SizeError(f"expected {self.num_parameters} angles, got {len(angles)}")
        for d, angle in enumerate(angles):
            self.set_gate(d, angle=float(angle))
        return self

    def copy(self) -> "Circuit":
        out = Circuit.__new__(Circuit)
        out.num_qubits = self.num_qubits
        out._gates = list(self._gates)
        out._positions = list(self._positions)
        return out

    def evaluate(self, initial : Optional[StateVector] = None, start : int = 0) -> StateVector:
        """ Apply ``gates[start:]`` to ``initial`` (``|0...0>`` when omitted). """
        state = zero_state(self.num_qubits) if initial is None else initial
        if state.num_qubits != self.num_qubits:
            raise SizeError(f"circuit has {self.num_qubits} qubits, initial state has {state.num_qubits}")
        for gate in self._gates[start:]:
            state = gate.apply(state)
        return state

    def __eq__(self, other):
        return isinstance(other, Circuit) and self.num_qubits == other.num_qubits and self._gates == other._gates

    def __repr__(self):
        return f"Circuit(num_qubits={self.num_qubits}, rotations={self.num_parameters}, fixed={self.num_fixed})"

    def to_text(self) -> str:
        """ One gate per line: ``ROT q<k> <generator> <angle>``, ``CZ q<i> q<j>`` or ``CNOT q<c> q<t>``. """
        lines = [f"# qubits {self.num_qubits}"]
        lines.extend(g.to_text() for g in self._gates)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text : str, num_qubits : Optional[int] = None) -> "Circuit":
        gates = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            fields = line.split()
            if line.startswith("#"):
                if len(fields) == 3 and fields[1] == "qubits" and num_qubits is None:
                    num_qubits = int(fields[2])
                continue
            try:
                if fields[0] == "ROT" and len(fields) == 4:
                    gates.append(RotationGate(_qubit(fields[1]), parse_generator(fields[2]), float(fields[3])))
                elif fields[0] in ("CZ", "CNOT") and len(fields) == 3:
                    gates.append(FixedGate(fields[0], (_qubit(fields[1]), _qubit(fields[2]))))
                else:
                    raise ValidationError(f"unrecognized gate {line!r}")
            except ValueError as e:
                raise ValidationError(f"line {lineno}: {e}") from None
        if num_qubits is None:
            num_qubits = 1 + max((q for g in gates for q in g.qubits), default=0)
        return cls(num_qubits, gates)


def _qubit(token : str) -> int:
    match = _QUBIT.match(token)
    if match is None:
        raise ValidationError(f"malformed qubit {token!r}")
    return int(match.group(1))


def evaluate(circuit : Circuit, initial : Optional[StateVector] = None) -> StateVector:
    return circuit.evaluate(initial)


def set_gate(circuit : Circuit, d : int, generator : Union[str, Generator, None] = None, angle : Optional[float] = None) -> Circuit:
    """ Functional form of :py:meth:`Circuit.set_gate`: returns a modified copy. """
    return circuit.with_gate(d, generator, angle)
