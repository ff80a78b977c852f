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
from functools import lru_cache
from typing import Sequence, Tuple

import torch

from .matrices import DTYPE, PAULI_ENTRIES, rotation_entries, rotation_matrix
from .statevector import StateVector
from ..errors import QubitIndexError, ValidationError

AXIS_TOLERANCE = 1e-9


def _check_qubits(state : StateVector, qubits : Sequence[int]) -> Tuple[int, ...]:
    qubits = tuple(qubits)
    for q in qubits:
        state.check_qubit(q)
    if len(set(qubits)) != len(qubits):
        raise QubitIndexError(f"repeated qubit in {qubits}")
    return qubits


def _apply_2x2(state : StateVector, qubit : int, u : torch.Tensor) -> StateVector:
    # view the register as (high bits, target bit, low bits) and contract the middle axis
    lo = 1 << qubit
    hi = state.dim >> (qubit + 1)
    out = torch.matmul(u, state.amplitudes.view(hi, 2, lo)).reshape(-1)
    return StateVector._wrap(out, state.num_qubits)


def apply_matrix(state : StateVector, matrix : torch.Tensor, qubits : Sequence[int]) -> StateVector:
    """ Apply a dense ``2**k x 2**k`` operator on ``k`` qubits.

    Bit ``j`` of the operator's row/column index refers to ``qubits[j]`` (least significant
    first), matching the register convention of :py:class:`StateVector`.

    Args:
        state (StateVector): input state.
        matrix (:obj:`torch.Tensor` of shape ``(2**k, 2**k)``): the operator, assumed unitary.
        qubits (sequence of int): the ``k`` distinct target qubits.

    Return:
        StateVector: the transformed state.
    """
    qubits = _check_qubits(state, qubits)
    k = len(qubits)
    matrix = torch.as_tensor(matrix, dtype=DTYPE)
    if matrix.shape != (1 << k, 1 << k):
        raise ValidationError(f"a {k}-qubit operator must be {1 << k}x{1 << k}, got {tuple(matrix.shape)}")
    if k == 1:
        return _apply_2x2(state, qubits[0], matrix)

    n = state.num_qubits
    psi = state.amplitudes.reshape([2] * n)
    op = matrix.reshape([2] * (2 * k))
    state_axes = [n - 1 - qubits[k - 1 - m] for m in range(k)]
    out = torch.tensordot(op, psi, dims=(list(range(k, 2 * k)), state_axes))
    out = torch.movedim(out, list(range(k)), state_axes)
    return StateVector._wrap(out.reshape(-1).contiguous(), n)


def apply_rotation(state : StateVector, qubit : int, generator, theta : float) -> StateVector:
    r""" Apply :math:`\exp(-i \theta H / 2)` on one qubit.

    Args:
        state (StateVector): input state.
        qubit (int): target qubit.
        generator: ``"X"``, ``"Y"``, ``"Z"`` or any single-qubit generator object exposing ``matrix()``.
        theta (float): rotation angle in radians.
    """
    state.check_qubit(qubit)
    if isinstance(generator, str):
        if generator not in ("X", "Y", "Z"):
            raise ValidationError(f"unknown Pauli generator {generator!r}")
        u = torch.tensor(rotation_entries(PAULI_ENTRIES[generator], theta), dtype=DTYPE)
    else:
        entries = getattr(generator, "entries", None)
        if entries is not None:
            u = torch.tensor(rotation_entries(entries, theta), dtype=DTYPE)
        else:
            h = generator.matrix()
            if h.shape != (2, 2):
                raise ValidationError(f"apply_rotation needs a single-qubit generator, got shape {tuple(h.shape)}")
            u = rotation_matrix(h, theta)
    return _apply_2x2(state, qubit, u)


def apply_generator(state : StateVector, qubits : Sequence[int], generator : torch.Tensor, theta : float) -> StateVector:
    r""" Apply :math:`\exp(-i \theta H / 2)` for a dense generator with :math:`H^2 = I` on any qubits. """
    return apply_matrix(state, rotation_matrix(torch.as_tensor(generator, dtype=DTYPE), theta), qubits)


def check_axis(axis : Sequence[float]) -> Tuple[float, float, float]:
    axis = tuple(float(c) for c in axis)
    if len(axis) != 3 or not all(math.isfinite(c) for c in axis):
        raise ValidationError(f"rotation axis must be three finite numbers, got {axis}")
    norm = math.sqrt(sum(c * c for c in axis))
    if abs(norm - 1.0) > AXIS_TOLERANCE:
        raise ValidationError(f"rotation axis must be a unit vector, got norm {norm!r}")
    return axis


def axis_entries(axis : Sequence[float]):
    """ Entries of :math:`c_x X + c_y Y + c_z Z` as nested python numbers. """
    cx, cy, cz = axis
    return (
        (cz, cx - 1j * cy),
        (cx + 1j * cy, -cz),
    )


def apply_arbitrary_axis(state : StateVector, qubit : int, axis : Sequence[float], theta : float) -> StateVector:
    r""" Rotation about the unit axis ``(c_x, c_y, c_z)``, generated by :math:`c_x X + c_y Y + c_z Z`. """
    axis = check_axis(axis)
    state.check_qubit(qubit)
    u = torch.tensor(rotation_entries(axis_entries(axis), theta), dtype=DTYPE)
    return _apply_2x2(state, qubit, u)


@lru_cache(maxsize=None)
def _cz_signs(n : int, a : int, b : int) -> torch.Tensor:
    idx = torch.arange(1 << n)
    both = ((idx >> a) & 1) & ((idx >> b) & 1)
    return (1 - 2 * both).to(DTYPE)


@lru_cache(maxsize=None)
def _cnot_permutation(n : int, control : int, target : int) -> torch.Tensor:
    idx = torch.arange(1 << n)
    return idx ^ (((idx >> control) & 1) << target)


def apply_cz(state : StateVector, a : int, b : int) -> StateVector:
    _check_qubits(state, (a, b))
    out = state.amplitudes * _cz_signs(state.num_qubits, min(a, b), max(a, b))
    return StateVector._wrap(out, state.num_qubits)


def apply_cnot(state : StateVector, control : int, target : int) -> StateVector:
    _check_qubits(state, (control, target))
    out = state.amplitudes[_cnot_permutation(state.num_qubits, control, target)]
    return StateVector._wrap(out, state.num_qubits)


def apply_fixed(state : StateVector, gate) -> StateVector:
    """ Apply a fixed entangler.

    Args:
        state (StateVector): input state.
        gate: object with ``kind`` in ``{"CZ", "CNOT"}`` and ``qubits``; for CNOT the
            qubits are ``(control, target)``.
    """
    kind = gate.kind
    a, b = gate.qubits
    if kind == "CZ":
        return apply_cz(state, a, b)
    if kind == "CNOT":
        return apply_cnot(state, a, b)
    raise ValidationError(f"unknown fixed gate {kind!r}")
