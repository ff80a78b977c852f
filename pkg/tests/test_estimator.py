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

import numpy as np
import pytest
import torch

from roto_center.config import EstimatorConfig
from roto_center.estimator import Estimator, EvalCounter, HamiltonianObjective, OverlapObjective, energy, state_overlap_energy
from roto_center.circuit import Circuit, build_layered_ansatz
from roto_center.pauli import Hamiltonian, build_heisenberg
from roto_center.qstate import StateVector
from roto_center.errors import ConfigError, SizeError

import oracle


def _target(n, seed):
    return StateVector(torch.from_numpy(oracle.random_state(n, np.random.default_rng(seed))))


class TestEvalCounter:

    def test_increment_returns_index(self):
        counter = EvalCounter()
        assert counter.increment() == 0
        assert counter.increment(3) == 1
        assert counter == 4
        assert int(counter) == 4

    def test_negative_start(self):
        with pytest.raises(ValueError):
            EvalCounter(-1)


class TestEstimatorConfig:

    def test_modes(self):
        assert EstimatorConfig().exact
        assert EstimatorConfig.exact_mode(seed=4).exact
        assert EstimatorConfig.exact_mode().effective_flat_threshold == EstimatorConfig().flat_threshold
        assert not EstimatorConfig.sampled(100).exact
        assert EstimatorConfig.sampled(100).effective_flat_threshold == 0.0

    @pytest.mark.parametrize("shots", [-1, 2.5])
    def test_bad_shots(self, shots):
        with pytest.raises(ConfigError):
            EstimatorConfig(shots_per_term=shots)

    def test_json_round_trip(self, tmp_path):
        config = EstimatorConfig(shots_per_term=1000, seed=7, track_exact=True)
        path = tmp_path / "estimator.json"
        config.to_json_file(str(path))
        assert EstimatorConfig.from_json_file(str(path)) == config


class TestExactEnergy:
    """Exact mode against the dense oracle."""

    def test_against_dense(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            n = int(rng.integers(2, 5))
            ham = Hamiltonian(oracle.random_hamiltonian_terms(n, 6, rng))
            c = oracle.random_circuit(n, 10, rng)
            assert energy(c, ham) == pytest.approx(oracle.energy(c, ham), abs=1e-10)

    def test_every_call_counts_once(self):
        ham = build_heisenberg(3)
        est = Estimator(ham)
        c = build_layered_ansatz(3, 2)
        for k in range(5):
            assert est.estimate(c).eval_index == k
        assert est.evaluations == 5

    def test_uncounted_helpers(self):
        est = Estimator(build_heisenberg(3))
        c = build_layered_ansatz(3, 2)
        est.exact_energy(c)
        est.prefix(c, 3)
        est.monitor().energy(c)
        assert est.evaluations == 0

    def test_prefix_matches_full_run(self):
        est = Estimator(build_heisenberg(4))
        c = build_layered_ansatz(4, 3, init_seed=1)
        for d in (0, 5, 11):
            assert est.energy(c, est.prefix(c, d)) == pytest.approx(est.energy(c), abs=1e-12)

    def test_size_mismatch(self):
        with pytest.raises(SizeError):
            Estimator(build_heisenberg(3)).energy(build_layered_ansatz(2, 1))

    def test_shared_counter(self):
        counter = EvalCounter(10)
        energy(build_layered_ansatz(2, 1), build_heisenberg(2), counter=counter)
        assert counter == 11


class TestSampledEnergy:
    """Shot-noise estimates."""

    def test_unbiased_over_seeds(self):
        ham = build_heisenberg(3, h=0.5)
        c = build_layered_ansatz(3, 2, init_seed=2)
        exact = oracle.energy(c, ham)
        samples = np.array([Estimator(ham, EstimatorConfig.sampled(100, seed=s)).energy(c) for s in range(200)])
        standard_error = samples.std(ddof=1) / math.sqrt(len(samples))
        assert standard_error > 0
        assert abs(samples.mean() - exact) <= 4 * standard_error

    def test_deterministic_per_seed(self):
        ham = build_heisenberg(3)
        c = build_layered_ansatz(3, 2)
        config = EstimatorConfig.sampled(100, seed=3)
        a = [Estimator(ham, config).energy(c) for _ in range(2)]
        assert a[0] == a[1]
        est = Estimator(ham, config)
        assert est.energy(c) != est.energy(c)

    def test_identity_term_is_exact(self):
        ham = Hamiltonian([(2.5, "II")])
        est = Estimator(ham, EstimatorConfig.sampled(1))
        assert est.energy(build_layered_ansatz(2, 1)) == 2.5

    def test_track_exact(self):
        ham = build_heisenberg(3)
        c = build_layered_ansatz(3, 2)
        est = Estimator(ham, EstimatorConfig.sampled(10, track_exact=True))
        assert est.estimate(c).exact == pytest.approx(oracle.energy(c, ham), abs=1e-10)
        assert Estimator(ham, EstimatorConfig.sampled(10)).estimate(c).exact is None

    def test_monitor_stream_differs(self):
        ham = build_heisenberg(3)
        c = build_layered_ansatz(3, 2)
        est = Estimator(ham, EstimatorConfig.sampled(50, seed=1))
        assert est.monitor().energy(c) != Estimator(ham, EstimatorConfig.sampled(50, seed=1)).energy(c)

    def test_million_shots_within_three_sigma(self):
        rng = np.random.default_rng(4)
        shots = 10 ** 6
        outside = 0
        for case in range(50):
            n = int(rng.integers(2, 5))
            ham = Hamiltonian(oracle.random_hamiltonian_terms(n, 5, rng))
            c = oracle.random_circuit(n, 8, rng)
            psi = c.evaluate()
            means = ham.term_expectations(psi).numpy()
            weights = ham.weights.numpy()
            var = sum(w * w * (1 - m * m) / shots for (w, word), m in zip(ham.terms, means) if not word.is_identity)
            value = Estimator(ham, EstimatorConfig.sampled(shots, seed=case)).energy(c)
            if abs(value - float(np.dot(weights, means))) > 3 * math.sqrt(var) + 1e-12:
                outside += 1
        assert outside <= 2


class TestOverlapObjective:
    """The state-preparation objective -|<target|psi>|^2."""

    def test_exact(self):
        target = _target(3, 5)
        c = oracle.random_circuit(3, 6, np.random.default_rng(5))
        want = -abs(np.vdot(target.numpy(), oracle.circuit_state(c))) ** 2
        assert state_overlap_energy(c, target) == pytest.approx(want, abs=1e-12)

    def test_reaches_minus_one_on_target(self):
        c = build_layered_ansatz(2, 2, init_seed=6)
        target = c.evaluate()
        assert OverlapObjective(target).exact(c.evaluate()) == pytest.approx(-1.0, abs=1e-12)

    def test_sampled_is_a_success_fraction(self):
        target = _target(2, 7)
        c = build_layered_ansatz(2, 1)
        value = state_overlap_energy(c, target, EstimatorConfig.sampled(1000, seed=2))
        assert -1.0 <= value <= 0.0
        assert round(value * 1000) == pytest.approx(value * 1000, abs=1e-9)

    def test_hamiltonian_and_state_objectives(self):
        assert isinstance(Estimator(build_heisenberg(2)).objective, HamiltonianObjective)
        assert isinstance(Estimator(_target(2, 8)).objective, OverlapObjective)
