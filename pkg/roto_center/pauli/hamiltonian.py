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
import numbers
import os
import logging
from functools import cached_property
from typing import Iterable, List, Tuple, Union

import torch

from .pauli_string import PauliString, PAULI_LETTERS
from .expectation import word_action
from ..qstate import DTYPE, StateVector
from ..errors import SizeError, ValidationError, HamiltonianParseError

logger = logging.getLogger(__name__)

_DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "hamiltonians")

SAMPLE_HAMILTONIANS = {
    "h2": "h2_sto3g_parity.txt",
}


class Hamiltonian:
    r""" A real-weighted sum of Pauli words :math:`M = \sum_i w_i M_i`.

    Words that appear more than once are merged into one term whose weight is the sum of
    the individual weights; the order of first appearance is kept.

    Args:
        terms (iterable of ``(weight, word)``): real weights and :py:class:`PauliString` (or plain ``str``) words.
    """

    def __init__(self, terms : Iterable[Tuple[float, Union[str, PauliString]]]):
        merged = {}
        num_qubits = None
        for weight, word in terms:
            if isinstance(word, str):
                word = PauliString(word)
            if not isinstance(weight, numbers.Real) or not math.isfinite(weight):
                raise ValidationError(f"term {word} needs a finite real weight, got {weight!r}")
            if num_qubits is None:
                num_qubits = word.num_qubits
            elif word.num_qubits != num_qubits:
                raise SizeError(f"word {word} has {word.num_qubits} letters, expected {num_qubits}")
            merged[word] = merged.get(word, 0.0) + float(weight)
        if num_qubits is None:
            raise ValidationError("a Hamiltonian needs at least one term")
        self.num_qubits = num_qubits
        self.terms : Tuple[Tuple[float, PauliString], ...] = tuple((w, p) for p, w in merged.items())

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        return isinstance(other, Hamiltonian) and self.terms == other.terms

    def __repr__(self):
        return f"Hamiltonian(num_qubits={self.num_qubits}, num_terms={len(self.terms)})"

    @property
    def words(self) -> List[PauliString]:
        return [p for _, p in self.terms]

    @cached_property
    def weights(self) -> torch.Tensor:
        return torch.tensor([w for w, _ in self.terms], dtype=torch.float64)

    @cached_property
    def identity_mask(self) -> torch.Tensor:
        return torch.tensor([p.is_identity for _, p in self.terms], dtype=torch.bool)

    @cached_property
    def _actions(self) -> Tuple[torch.Tensor, torch.Tensor]:
        flips, phases = zip(*(word_action(p) for _, p in self.terms))
        return torch.stack(flips), torch.stack(phases)

    def check_state(self, state : StateVector):
        if state.num_qubits != self.num_qubits:
            raise SizeError(f"Hamiltonian acts on {self.num_qubits} qubits, state has {state.num_qubits}")

    def term_expectations(self, state : StateVector) -> torch.Tensor:
        r""" :math:`\langle M_i \rangle` for every term, as a float64 tensor clipped to ``[-1, 1]``. """
        self.check_state(state)
        flips, phases = self._actions
        psi = state.amplitudes
        values = torch.sum(psi[flips].conj() * phases * psi, dim=-1).real
        return values.clamp(-1.0, 1.0)

    def expectation(self, state : StateVector) -> float:
        """ Exact energy of ``state``. """
        return torch.dot(self.weights, self.term_expectations(state)).item()

    def to_dense(self) -> torch.Tensor:
        """ The ``2**n x 2**n`` matrix of the operator, assembled from the sparse word actions. """
        dim = 1 << self.num_qubits
        flips, phases = self._actions
        out = torch.zeros((dim, dim), dtype=DTYPE)
        cols = torch.arange(dim)
        for t, (w, _) in enumerate(self.terms):
            out.index_put_((flips[t], cols), w * phases[t], accumulate=True)
        return out

    def to_text(self) -> str:
        return "".join(f"{w!r} {p}\n" for w, p in self.terms)


def build_heisenberg(n : int, J : float = 1.0, h : float = 1.0) -> Hamiltonian:
    r""" Heisenberg model on a ring with a uniform longitudinal field,

    .. math::
        J \sum_{(i,j)} (X_i X_j + Y_i Y_j + Z_i Z_j) + h \sum_i Z_i

    The edges are ``(i, (i + 1) mod n)``; for ``n = 2`` the ring degenerates to the single
    edge ``(0, 1)``. Terms with a zero coefficient are left out.

    Args:
        n (int): number of spins, at least 2.
        J (float): spin-spin coupling.
        h (float): field strength.
    """
    if not isinstance(n, int) or n < 2:
        raise SizeError(f"the Heisenberg ring needs at least 2 spins, got {n!r}")
    edges = [(0, 1)] if n == 2 else [(i, (i + 1) % n) for i in range(n)]
    terms = []
    if J != 0:
        for i, j in edges:
            for letter in "XYZ":
                terms.append((J, PauliString.from_sparse(n, {i: letter, j: letter})))
    if h != 0:
        for i in range(n):
            terms.append((h, PauliString.from_sparse(n, {i: "Z"})))
    if not terms:
        terms.append((0.0, PauliString("I" * n)))
    return Hamiltonian(terms)


def parse_hamiltonian(text : str) -> Hamiltonian:
    """ Parse the line format ``<weight> <word>``.

    Blank lines and lines whose first non-blank character is ``#`` are skipped. Every word
    must use the letters ``IXYZ`` and all words must have the same length.

    Raises:
        HamiltonianParseError: with the 1-based number of the offending line.
    """
    terms = []
    num_qubits = None
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise HamiltonianParseError(f"expected '<weight> <word>', got {line!r}", lineno)
        weight_text, word = fields
        try:
            weight = float(weight_text)
        except ValueError:
            raise HamiltonianParseError(f"malformed weight {weight_text!r}", lineno) from None
        if not math.isfinite(weight):
            raise HamiltonianParseError(f"weight must be finite, got {weight_text!r}", lineno)
        bad = [c for c in word if c not in PAULI_LETTERS]
        if bad:
            raise HamiltonianParseError(f"invalid Pauli letter {bad[0]!r} in {word!r}", lineno)
        if num_qubits is None:
            num_qubits = len(word)
        elif len(word) != num_qubits:
            raise HamiltonianParseError(f"word {word!r} has {len(word)} letters, expected {num_qubits}", lineno)
        terms.append((weight, PauliString(word)))
    if not terms:
        raise HamiltonianParseError("no terms found", max(lineno, 1))
    return Hamiltonian(terms)


def sample_hamiltonian_path(name : str) -> str:
    if name not in SAMPLE_HAMILTONIANS:
        raise ValidationError(f"unknown sample Hamiltonian {name!r}, expected one of {sorted(SAMPLE_HAMILTONIANS)}")
    return os.path.join(_DATA_DIR, SAMPLE_HAMILTONIANS[name])


def load_hamiltonian(path : Union[str, os.PathLike]) -> Hamiltonian:
    """ Read a Hamiltonian file; a bare sample name such as ``"h2"`` resolves to the packaged copy. """
    if isinstance(path, str) and path in SAMPLE_HAMILTONIANS and not os.path.exists(path):
        path = sample_hamiltonian_path(path)
    with open(path, "r", encoding="utf-8") as reader:
        text = reader.read()
    ham = parse_hamiltonian(text)
    logger.info("loaded %d terms on %d qubits from %s", len(ham), ham.num_qubits, path)
    return ham
