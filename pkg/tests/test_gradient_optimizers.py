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

from roto_center.optim import Adam, SPSA, adam, spsa, parameter_shift_gradient, MaxCycles
from roto_center.config import AdamConfig, SPSAConfig, EstimatorConfig
from roto_center.estimator import Estimator
from roto_center.circuit import Circuit, build_layered_ansatz
from roto_center.pauli import Hamiltonian, build_heisenberg

import oracle


class TestParameterShift:
    """Gradients from two shifted evaluations per angle."""

    def test_against_finite_differences(self):
        rng = np.random.default_rng(0)
        step = 1e-5
        for _ in range(50):
            n = int(rng.integers(1, 5))
            ham = Hamiltonian(oracle.random_hamiltonian_terms(n, 5, rng))
            circuit = oracle.random_circuit(n, int(rng.integers(1, 7)), rng, generators="axis")
            grad = parameter_shift_gradient(circuit, Estimator(ham))
            assert grad.dtype == torch.float64
            for d, theta in enumerate(circuit.angles):
                plus = oracle.energy(circuit.with_gate(d, angle=theta + step), ham)
                minus = oracle.energy(circuit.with_gate(d, angle=theta - step), ham)
                assert grad[d].item() == pytest.approx((plus - minus) / (2 * step), abs=1e-6)

    def test_cost_and_no_side_effects(self):
        circuit = build_layered_ansatz(3, 2)
        snapshot = circuit.copy()
        est = Estimator(build_heisenberg(3))
        parameter_shift_gradient(circuit, est)
        assert est.evaluations == 2 * circuit.num_parameters
        assert circuit == snapshot


class TestAdam:

    def test_step_cost(self):
        circuit = build_layered_ansatz(2, 2)
        trace = adam(circuit, build_heisenberg(2), stop=MaxCycles(5))
        assert trace.cycles == 5
        assert trace.evaluations == 5 * 2 * circuit.num_parameters
        assert all(r.gate_index == -1 for r in trace.records)

    def test_single_qubit_converges(self):
        ham = Hamiltonian([(1.0, "Z")])
        trace = adam(Circuit(1).add_rotation(0, "X", 0.3), ham, stop=MaxCycles(300), learning_rate=0.05)
        assert trace.best_energy < -0.99
        # the angle is stored wrapped, so compare on the circle
        angle = trace.final_circuit.rotation(0).angle
        assert math.cos(angle - math.pi) > 0.99

    def test_lowers_energy(self):
        ham = build_heisenberg(3)
        trace = adam(build_layered_ansatz(3, 2, init_seed=1), ham, stop=MaxCycles(60))
        assert trace.best_energy < trace.initial_energy
        assert oracle.energy(trace.final_circuit, ham) == pytest.approx(trace.energies[-1], abs=1e-10)

    def test_monitor_is_uncounted_in_sampled_mode(self):
        circuit = build_layered_ansatz(2, 1)
        config = EstimatorConfig.sampled(100, seed=2)
        trace = adam(circuit, build_heisenberg(2), config, MaxCycles(3))
        assert trace.evaluations == 3 * 2 * circuit.num_parameters
        again = adam(circuit, build_heisenberg(2), config, MaxCycles(3))
        assert trace.energies == again.energies

    def test_config(self):
        assert Adam(AdamConfig(lr=0.1)).config.lr == 0.1


class TestSPSA:

    def test_gains(self):
        opt = SPSA(SPSAConfig(a=0.2, c=0.1, alpha=0.602, gamma=0.101, stability=5.0))
        a0, c0 = opt.gains(0)
        assert a0 == pytest.approx(0.2 / 6.0 ** 0.602)
        assert c0 == pytest.approx(0.1)
        a9, c9 = opt.gains(9)
        assert a9 == pytest.approx(0.2 / 15.0 ** 0.602)
        assert c9 == pytest.approx(0.1 / 10.0 ** 0.101)

    def test_step_cost(self):
        trace = spsa(build_layered_ansatz(3, 2), build_heisenberg(3), stop=MaxCycles(7))
        assert trace.evaluations == 14
        assert trace.cycles == 7

    def test_deterministic_per_seed(self):
        ham = build_heisenberg(3)
        circuit = build_layered_ansatz(3, 2)
        a = spsa(circuit, ham, stop=MaxCycles(10), seed=4)
        b = spsa(circuit, ham, stop=MaxCycles(10), seed=4)
        c = spsa(circuit, ham, stop=MaxCycles(10), seed=5)
        assert a.energies == b.energies
        assert a.energies != c.energies

    def test_lowers_energy(self):
        ham = build_heisenberg(3)
        trace = spsa(build_layered_ansatz(3, 2, init_seed=2), ham, stop=MaxCycles(300))
        assert trace.best_energy < trace.initial_energy

    def test_scalar_landscape(self):
        ham = Hamiltonian([(1.0, "Z")])
        rng = np.random.default_rng(8)
        finals = []
        for seed in range(20):
            start = Circuit(1).add_rotation(0, "X", float(rng.uniform(-np.pi, np.pi)))
            trace = spsa(start, ham, stop=MaxCycles(2000), seed=seed)
            finals.append(oracle.energy(trace.final_circuit, ham))
        assert np.mean(finals) < -0.9
