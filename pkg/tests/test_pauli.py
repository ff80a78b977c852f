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

import numpy as np
import pytest
import torch

from roto_center.pauli import (
    PauliString, Hamiltonian, build_heisenberg, parse_hamiltonian, load_hamiltonian,
    sample_hamiltonian_path, expectation_of_word, exact_spectrum_bounds, SpectrumBounds,
)
from roto_center.qstate import StateVector, zero_state
from roto_center.errors import SizeError, ValidationError, HamiltonianParseError

import oracle


def _random(n, seed):
    return StateVector(torch.from_numpy(oracle.random_state(n, np.random.default_rng(seed))))


class TestPauliString:
    """Word validation and bit masks."""

    def test_masks(self):
        word = PauliString("XYZI")
        assert word.x_mask == 0b0011
        assert word.z_mask == 0b0110
        assert word.num_y == 1
        assert word.support == (0, 1, 2)

    def test_from_sparse(self):
        assert PauliString.from_sparse(4, {1: "X", 3: "Z"}) == PauliString("IXIZ")
        with pytest.raises(ValidationError):
            PauliString.from_sparse(2, {2: "X"})

    @pytest.mark.parametrize("letters", ["", "XA", "x"])
    def test_invalid(self, letters):
        with pytest.raises(ValidationError):
            PauliString(letters)

    def test_matrix_letter_order(self):
        # letter k acts on qubit k
        np.testing.assert_allclose(PauliString("ZX").matrix().numpy(), np.kron(oracle.PAULI["X"], oracle.PAULI["Z"]))


class TestExpectation:
    """Single-word expectation values against dense matrices."""

    @pytest.mark.parametrize("word", ["IIII", "XIII", "IYZI", "XYZX", "YYYY", "ZIIZ"])
    def test_against_dense(self, word):
        psi = _random(4, 11)
        want = np.real(np.vdot(psi.numpy(), oracle.word_matrix(word) @ psi.numpy()))
        assert expectation_of_word(psi, PauliString(word)) == pytest.approx(want, abs=1e-12)

    def test_identity_is_one(self):
        assert expectation_of_word(_random(3, 1), "III") == 1.0

    def test_basis_state(self):
        # |0..0> has <Z_q> = 1 for every q
        assert expectation_of_word(zero_state(3), "IZI") == pytest.approx(1.0)
        assert expectation_of_word(zero_state(3), "XII") == pytest.approx(0.0)

    def test_length_mismatch(self):
        with pytest.raises(SizeError):
            expectation_of_word(zero_state(2), PauliString("XXX"))

    def test_bounded(self):
        rng = np.random.default_rng(12)
        for seed in range(20):
            word = "".join("IXYZ"[k] for k in rng.integers(4, size=3))
            assert -1.0 <= expectation_of_word(_random(3, seed), word) <= 1.0


class TestHamiltonian:
    """Sums of words, dense assembly and the text format."""

    def test_expectation_against_dense(self):
        rng = np.random.default_rng(13)
        for seed in range(10):
            ham = Hamiltonian(oracle.random_hamiltonian_terms(4, 8, rng))
            psi = _random(4, seed)
            want = np.real(np.vdot(psi.numpy(), oracle.hamiltonian_matrix(ham) @ psi.numpy()))
            assert ham.expectation(psi) == pytest.approx(want, abs=1e-10)

    def test_to_dense(self):
        rng = np.random.default_rng(14)
        ham = Hamiltonian(oracle.random_hamiltonian_terms(3, 6, rng))
        np.testing.assert_allclose(ham.to_dense().numpy(), oracle.hamiltonian_matrix(ham), atol=1e-12)

    def test_duplicates_merge(self):
        ham = Hamiltonian([(0.5, "XZ"), (1.0, "ZZ"), (0.25, "XZ")])
        assert ham.terms == ((0.75, PauliString("XZ")), (1.0, PauliString("ZZ")))

    def test_mixed_lengths(self):
        with pytest.raises(SizeError):
            Hamiltonian([(1.0, "XX"), (1.0, "X")])

    def test_empty(self):
        with pytest.raises(ValidationError):
            Hamiltonian([])

    def test_non_finite_weight(self):
        with pytest.raises(ValidationError):
            Hamiltonian([(float("nan"), "X")])

    def test_state_size_checked(self):
        with pytest.raises(SizeError):
            build_heisenberg(3).expectation(zero_state(2))


class TestHeisenberg:
    """The ring model and its spectrum."""

    def test_two_spins_single_edge(self):
        ham = build_heisenberg(2, J=1.0, h=0.0)
        assert len(ham) == 3
        bounds = exact_spectrum_bounds(ham)
        assert bounds.e_min == pytest.approx(-3.0, abs=1e-10)
        assert bounds.e_max == pytest.approx(1.0, abs=1e-10)

    @pytest.mark.parametrize("n,count", [(3, 12), (5, 20)])
    def test_term_count(self, n, count):
        assert len(build_heisenberg(n)) == count

    def test_bell_state(self):
        bell = StateVector(torch.tensor([1, 0, 0, 1], dtype=torch.complex128) / np.sqrt(2))
        assert expectation_of_word(bell, "XX") == pytest.approx(1.0, abs=1e-12)

    def test_spectrum_contains_expectations(self):
        ham = build_heisenberg(4)
        bounds = exact_spectrum_bounds(ham)
        for seed in range(10):
            e = ham.expectation(_random(4, seed))
            assert bounds.e_min - 1e-9 <= e <= bounds.e_max + 1e-9

    def test_linearity(self):
        ham = build_heisenberg(3, J=0.3, h=-1.1)
        psi = _random(3, 21)
        assert ham.expectation(psi) == pytest.approx(sum(w * expectation_of_word(psi, p) for w, p in ham.terms), abs=1e-12)

    def test_ring_terms(self):
        ham = build_heisenberg(4, J=0.5, h=2.0)
        assert len(ham) == 4 * 3 + 4
        assert (0.5, PauliString("XIIX")) in ham.terms
        assert (2.0, PauliString("IIZI")) in ham.terms

    def test_zero_field_dropped(self):
        assert len(build_heisenberg(3, h=0.0)) == 9

    def test_spectrum_against_numpy(self):
        ham = build_heisenberg(5)
        eig = np.linalg.eigvalsh(oracle.hamiltonian_matrix(ham))
        bounds = exact_spectrum_bounds(ham)
        assert bounds.e_min == pytest.approx(eig[0], abs=1e-9)
        assert bounds.e_max == pytest.approx(eig[-1], abs=1e-9)

    def test_too_small(self):
        with pytest.raises(SizeError):
            build_heisenberg(1)

    def test_spectrum_cap(self):
        with pytest.raises(SizeError):
            exact_spectrum_bounds(build_heisenberg(4), max_qubits=3)

    def test_normalized_distance(self):
        bounds = SpectrumBounds(-3.0, 1.0)
        assert bounds.normalized_distance(-3.0) == 0.0
        assert bounds.normalized_distance(-2.92) == pytest.approx(0.02)
        assert SpectrumBounds(2.0, 2.0).normalized_distance(2.0) == 0.0
        with pytest.raises(ValidationError):
            SpectrumBounds(1.0, 0.0)


class TestParse:
    """The ``<weight> <word>`` file format."""

    def test_round_trip(self):
        ham = build_heisenberg(3, J=0.7, h=-0.2)
        assert parse_hamiltonian(ham.to_text()) == ham

    def test_comments_and_blanks(self):
        ham = parse_hamiltonian("# header\n\n  1.5 XZ\n  # indented comment\n-0.5 II\n")
        assert ham.terms == ((1.5, PauliString("XZ")), (-0.5, PauliString("II")))

    @pytest.mark.parametrize("text,lineno", [
        ("1.0 XX\n2.0 XQ\n", 2),
        ("1.0 XX\nabc XX\n", 2),
        ("1.0 XX\n1.0 XXX\n", 2),
        ("1.0\n", 1),
        ("inf XX\n", 1),
        ("# nothing\n", 1),
        ("", 1),
    ])
    def test_errors_carry_line(self, text, lineno):
        with pytest.raises(HamiltonianParseError) as info:
            parse_hamiltonian(text)
        assert info.value.lineno == lineno
        assert str(info.value).startswith(f"line {lineno}:")

    def test_load_file(self, tmp_path):
        path = tmp_path / "ham.txt"
        path.write_text("0.5 ZZ\n0.5 XX\n")
        ham = load_hamiltonian(str(path))
        assert ham.num_qubits == 2
        assert len(ham) == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_hamiltonian(str(tmp_path / "absent.txt"))

    def test_h2_sample(self):
        ham = load_hamiltonian("h2")
        assert ham == load_hamiltonian(sample_hamiltonian_path("h2"))
        assert ham.num_qubits == 2
        bounds = exact_spectrum_bounds(ham)
        assert -1.9 < bounds.e_min < -1.8
