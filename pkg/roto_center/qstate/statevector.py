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

import torch
from .matrices import DTYPE
from ..errors import SizeError, ValidationError, QubitIndexError

# Largest register the simulator accepts unless the caller raises the cap.
MAX_QUBITS = 14

NORM_TOLERANCE = 1e-12


class StateVector:
    """ Pure state of ``num_qubits`` qubits stored as ``2**num_qubits`` complex amplitudes.

    Qubit 0 is the least significant bit of the basis index: amplitude ``k`` belongs to the
    basis state whose qubit ``q`` reads ``(k >> q) & 1``.

    Instances are treated as immutable values; every gate application returns a new one.

    Args:
        amplitudes (:obj:`torch.Tensor` or sequence): the ``2**n`` amplitudes, normalized within 1e-12.
        max_qubits (int, optional): qubit cap. Defaults to :py:data:`MAX_QUBITS`.
    """

    __slots__ = ("num_qubits", "amplitudes")

    def __init__(self, amplitudes, max_qubits : int = MAX_QUBITS):
        amplitudes = torch.as_tensor(amplitudes, dtype=DTYPE).reshape(-1).clone()
        size = amplitudes.numel()
        num_qubits = size.bit_length() - 1
        if size < 2 or (1 << num_qubits) != size:
            raise SizeError(f"amplitude count must be a power of two >= 2, got {size}")
        if num_qubits > max_qubits:
            raise SizeError(f"{num_qubits} qubits exceeds the cap of {max_qubits}")
        norm = torch.linalg.vector_norm(amplitudes).item()
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise ValidationError(f"state is not normalized: norm = {norm!r}")
        self.num_qubits = num_qubits
        self.amplitudes = amplitudes

    @classmethod
    def _wrap(cls, amplitudes : torch.Tensor, num_qubits : int) -> "StateVector":
        # kernel results are unitary images of valid states, no re-validation
        state = cls.__new__(cls)
        state.num_qubits = num_qubits
        state.amplitudes = amplitudes
        return state

    @property
    def dim(self) -> int:
        return 1 << self.num_qubits

    def norm(self) -> float:
        return torch.linalg.vector_norm(self.amplitudes).item()

    def probabilities(self) -> torch.Tensor:
        return self.amplitudes.abs() ** 2

    def numpy(self):
        return self.amplitudes.numpy().copy()

    def check_qubit(self, qubit : int) -> int:
        if not isinstance(qubit, int) or isinstance(qubit, bool) or not 0 <= qubit < self.num_qubits:
            raise QubitIndexError(f"qubit index {qubit!r} out of range for {self.num_qubits} qubits")
        return qubit

    def __len__(self):
        return self.dim

    def __repr__(self):
        return f"StateVector(num_qubits={self.num_qubits})"


def zero_state(n : int, max_qubits : int = MAX_QUBITS) -> StateVector:
    """ The fiducial state ``|0...0>`` on ``n`` qubits.

    Args:
        n (int): qubit count, ``1 <= n <= max_qubits``.
        max_qubits (int, optional): qubit cap. Defaults to 14.

    Return:
        StateVector: amplitude 1 at basis index 0.
    """
    if not isinstance(n, int) or n < 1 or n > max_qubits:
        raise SizeError(f"qubit count must lie in [1, {max_qubits}], got {n!r}")
    amplitudes = torch.zeros(1 << n, dtype=DTYPE)
    amplitudes[0] = 1.0
    return StateVector._wrap(amplitudes, n)


def inner_product(a : StateVector, b : StateVector) -> complex:
    r""" :math:`\langle a | b \rangle`, conjugate-linear in the first argument. """
    if a.num_qubits != b.num_qubits:
        raise SizeError(f"cannot take the overlap of {a.num_qubits}- and {b.num_qubits}-qubit states")
    return complex(torch.vdot(a.amplitudes, b.amplitudes).item())
