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

from .circuit import Circuit
from .generator import PAULI_GENERATORS, Y
from ..utils.rng import stream, uniform_angle
from ..errors import SizeError


def _check_sizes(n : int, layers : int, min_qubits : int):
    if not isinstance(n, int) or n < min_qubits:
        raise SizeError(f"the ansatz needs at least {min_qubits} qubits, got {n!r}")
    if not isinstance(layers, int) or layers < 1:
        raise SizeError(f"the ansatz needs at least one layer, got {layers!r}")


def build_layered_ansatz(n : int, layers : int, init_seed : int = 0) -> Circuit:
    """ Rotation layers, each followed by a nearest-neighbour CZ ladder.

    Every layer holds one rotation per qubit, with a generator drawn uniformly from
    ``{X, Y, Z}`` and an angle drawn uniformly from (-pi, pi], then ``CZ(q, q+1)`` for
    ``q = 0 .. n-2``.

    Args:
        n (int): number of qubits, at least 2.
        layers (int): number of layers, at least 1.
        init_seed (int, optional): seed of the initial generators and angles. Defaults to 0.

    Return:
        Circuit: ``n * layers`` rotations and ``(n - 1) * layers`` CZ gates.
    """
    _check_sizes(n, layers, 2)
    rng = stream(init_seed)
    circuit = Circuit(n)
    for _ in range(layers):
        for q in range(n):
            generator = PAULI_GENERATORS[int(rng.integers(3))]
            circuit.add_rotation(q, generator, uniform_angle(rng))
        for q in range(n - 1):
            circuit.add_cz(q, q + 1)
    return circuit


def build_circuit15(n : int, layers : int, init_seed : int = 0) -> Circuit:
    """ The two-block R_Y / CNOT-ring ansatz ("circuit 15" of the expressibility catalogue).

    Each layer is

    1. an R_Y column on every qubit,
    2. ``CNOT(i -> (i + 1) mod n)`` for ``i = n-1, n-2, .., 0``,
    3. a second R_Y column,
    4. ``CNOT(c -> (c - 1) mod n)`` for ``c = n-1, 0, 1, .., n-2``.

    The catalogue draws only the four-qubit case; for four qubits the two blocks are
    ``3->0, 2->3, 1->2, 0->1`` and ``3->2, 0->3, 1->0, 2->1``. The generalization keeps both
    ring directions and their starting points.

    Args:
        n (int): number of qubits, at least 3.
        layers (int): number of layers, at least 1.
        init_seed (int, optional): seed of the initial angles. Defaults to 0.
    """
    _check_sizes(n, layers, 3)
    rng = stream(init_seed)
    circuit = Circuit(n)
    for _ in range(layers):
        for q in range(n):
            circuit.add_rotation(q, Y, uniform_angle(rng))
        for i in reversed(range(n)):
            circuit.add_cnot(i, (i + 1) % n)
        for q in range(n):
            circuit.add_rotation(q, Y, uniform_angle(rng))
        for c in [n - 1] + list(range(n - 1)):
            circuit.add_cnot(c, (c - 1) % n)
    return circuit
