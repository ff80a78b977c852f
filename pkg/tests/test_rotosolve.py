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

from roto_center.optim import (
    Rotosolve, rotosolve, rotosolve_update, MaxCycles, MaxEvaluations, NoImprovement, TargetEnergy, build_stopping,
)
from roto_center.config import EstimatorConfig, RotosolveConfig, RotoselectConfig
from roto_center.estimator import Estimator, EvalCounter
from roto_center.circuit import Circuit, ArbitraryAxis, build_layered_ansatz
from roto_center.pauli import Hamiltonian, build_heisenberg
from roto_center.errors import ConfigError, ValidationError

import oracle


def _assert_monotone(trace, tol=1e-9):
    energies = [trace.initial_energy] + trace.energies
    for before, after in zip(energies, energies[1:]):
        assert after <= before + tol


class TestRotosolveUpdate:
    """A single closed-form coordinate update."""

    def test_single_qubit(self):
        # <Z> after RX(theta) on |0> is cos(theta), minimized at pi
        ham = Hamiltonian([(1.0, "Z")])
        work = Circuit(1).add_rotation(0, "X", 0.3)
        est = Estimator(ham)
        result = rotosolve_update(work, 0, est)
        assert result.evaluations == 3
        assert result.energy == pytest.approx(-1.0, abs=1e-12)
        assert abs(work.rotation(0).angle) == pytest.approx(math.pi, abs=1e-12)

    def test_extrapolated_energy_is_real_energy(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            n = int(rng.integers(2, 5))
            ham = Hamiltonian(oracle.random_hamiltonian_terms(n, 6, rng))
            work = oracle.random_circuit(n, 8, rng)
            d = int(rng.integers(work.num_parameters))
            before = oracle.energy(work, ham)
            result = rotosolve_update(work, d, Estimator(ham))
            assert result.energy == pytest.approx(oracle.energy(work, ham), abs=1e-10)
            assert result.energy <= before + 1e-10

    @pytest.mark.parametrize("policy", ["zero", "random"])
    def test_phi_policy_same_minimum(self, policy):
        ham = build_heisenberg(3)
        base = build_layered_ansatz(3, 2, init_seed=1)
        a, b = base.copy(), base.copy()
        ea = rotosolve_update(a, 2, Estimator(ham)).energy
        eb = rotosolve_update(b, 2, Estimator(ham), RotosolveConfig(phi_policy=policy), rng=np.random.default_rng(2)).energy
        assert ea == pytest.approx(eb, abs=1e-10)
        assert math.cos(a.rotation(2).angle - b.rotation(2).angle) == pytest.approx(1.0, abs=1e-9)

    def test_reuse_spends_two(self):
        ham = build_heisenberg(2)
        work = build_layered_ansatz(2, 2)
        est = Estimator(ham)
        known = est.exact_energy(work)
        result = rotosolve_update(work, 0, est, RotosolveConfig(reuse=True), known_energy=known)
        assert result.evaluations == 2
        assert est.evaluations == 2

    def test_reuse_matches_full_path(self):
        rng = np.random.default_rng(4)
        for _ in range(10):
            n = int(rng.integers(2, 5))
            ham = Hamiltonian(oracle.random_hamiltonian_terms(n, 6, rng))
            base = oracle.random_circuit(n, 6, rng, generators="axis")
            known = oracle.energy(base, ham)
            for d in range(base.num_parameters):
                full, reused = base.copy(), base.copy()
                ef = rotosolve_update(full, d, Estimator(ham)).energy
                er = rotosolve_update(reused, d, Estimator(ham), RotosolveConfig(reuse=True), known_energy=known).energy
                assert er == pytest.approx(ef, abs=1e-10)
                assert math.cos(full.rotation(d).angle - reused.rotation(d).angle) == pytest.approx(1.0, abs=1e-9)

    def test_flat_keeps_angle(self):
        # Z rotations on |0> only add a phase
        ham = Hamiltonian([(1.0, "ZI")])
        work = Circuit(2).add_rotation(1, "Z", 0.4).add_rotation(0, "X", 0.1)
        result = rotosolve_update(work, 0, Estimator(ham))
        assert result.flat
        assert work.rotation(0).angle == pytest.approx(0.4)
        assert result.energy == pytest.approx(math.cos(0.1), abs=1e-12)

    def test_random_axis(self):
        ham = build_heisenberg(2)
        work = build_layered_ansatz(2, 1)
        est = Estimator(ham)
        result = rotosolve_update(work, 1, est, RotosolveConfig(random_axis=True), rng=np.random.default_rng(3))
        assert isinstance(work.rotation(1).generator, ArbitraryAxis)
        assert result.energy == pytest.approx(est.exact_energy(work), abs=1e-10)


class TestRotosolve:
    """Full optimization runs."""

    @pytest.mark.parametrize("layers,qubits", [(1, 2), (2, 3), (3, 2)])
    def test_cycle_costs_three_per_gate(self, layers, qubits):
        circuit = build_layered_ansatz(qubits, layers)
        trace = rotosolve(circuit, build_heisenberg(qubits), stop=MaxCycles(3))
        assert trace.cycles == 3
        assert trace.evaluations == 3 * 3 * circuit.num_parameters

    def test_reuse_cycle_costs_two_per_gate(self):
        circuit = build_layered_ansatz(3, 2)
        D = circuit.num_parameters
        trace = rotosolve(circuit, build_heisenberg(3), stop=MaxCycles(3), optimizer_config=RotosolveConfig(reuse=True))
        assert trace.evaluations == 3 + 2 * (D - 1) + 2 * 2 * D

    def test_monotone(self):
        for seed in range(5):
            trace = rotosolve(build_layered_ansatz(4, 3, init_seed=seed), build_heisenberg(4), stop=MaxCycles(10))
            _assert_monotone(trace)

    def test_leaves_input_untouched(self):
        circuit = build_layered_ansatz(3, 2)
        snapshot = circuit.copy()
        trace = rotosolve(circuit, build_heisenberg(3), stop=MaxCycles(2))
        assert circuit == snapshot
        assert trace.final_circuit != snapshot

    def test_trace_records(self):
        circuit = build_layered_ansatz(2, 2)
        trace = rotosolve(circuit, build_heisenberg(2), stop=MaxCycles(2))
        assert len(trace) == 2 * circuit.num_parameters
        assert [r.gate_index for r in trace.records] == [0, 1, 2, 3] * 2
        assert [r.cycle for r in trace.records] == [0] * 4 + [1] * 4
        evals = [r.cumulative_evals for r in trace.records]
        assert evals == sorted(set(evals))
        assert trace.best_energy == pytest.approx(min(trace.energies))
        assert trace.best_exact == pytest.approx(trace.best_energy)
        assert trace.stop_reason == "MaxCycles(2)"

    def test_final_circuit_energy(self):
        ham = build_heisenberg(3)
        trace = rotosolve(build_layered_ansatz(3, 2), ham, stop=MaxCycles(5))
        assert oracle.energy(trace.final_circuit, ham) == pytest.approx(trace.energies[-1], abs=1e-10)

    def test_max_evaluations(self):
        trace = rotosolve(build_layered_ansatz(3, 2), build_heisenberg(3), stop=MaxCycles(100) | MaxEvaluations(20))
        assert trace.evaluations >= 20
        assert trace.evaluations < 23

    def test_evaluation_budget_without_cycle_cap(self):
        stop = build_stopping(None, max_evals=30)
        trace = rotosolve(build_layered_ansatz(3, 2), build_heisenberg(3), stop=stop)
        assert trace.evaluations == 30
        with pytest.raises(ConfigError):
            build_stopping(None)

    def test_reuse_run_matches_full_run(self):
        ham = build_heisenberg(3)
        circuit = build_layered_ansatz(3, 2, init_seed=6)
        full = rotosolve(circuit, ham, stop=MaxCycles(2))
        reused = rotosolve(circuit, ham, stop=MaxCycles(2), optimizer_config=RotosolveConfig(reuse=True))
        np.testing.assert_allclose(reused.energies, full.energies, atol=1e-9)
        for a, b in zip(full.final_circuit.angles, reused.final_circuit.angles):
            assert math.cos(a - b) == pytest.approx(1.0, abs=1e-9)

    def test_target_energy(self):
        ham = build_heisenberg(3)
        circuit = build_layered_ansatz(3, 2)
        target = rotosolve(circuit, ham, stop=MaxCycles(1)).energies[-1]
        trace = rotosolve(circuit, ham, stop=MaxCycles(50) | TargetEnergy(target))
        assert trace.best_energy <= target
        assert len(trace) <= circuit.num_parameters
        assert trace.stop_reason.startswith("TargetEnergy")

    def test_no_improvement(self):
        ham = Hamiltonian([(1.0, "Z")])
        trace = rotosolve(Circuit(1).add_rotation(0, "X", 0.3), ham, stop=MaxCycles(50) | NoImprovement(3, 1e-6))
        # the first cycle solves it, the next three bring nothing
        assert trace.cycles == 4

    def test_counter_offset(self):
        counter = EvalCounter(100)
        trace = rotosolve(build_layered_ansatz(2, 1), build_heisenberg(2), stop=MaxCycles(1), counter=counter)
        assert trace.evaluations == 6
        assert counter == 106
        assert trace.records[0].cumulative_evals == 103

    def test_sampled_deterministic(self):
        config = EstimatorConfig.sampled(200, seed=5)
        runs = [rotosolve(build_layered_ansatz(3, 2), build_heisenberg(3), config, MaxCycles(3)) for _ in range(2)]
        assert runs[0].energies == runs[1].energies

    def test_wrong_config_type(self):
        with pytest.raises(ConfigError):
            Rotosolve(RotoselectConfig())

    def test_reuse_needs_current_policy(self):
        with pytest.raises(ConfigError):
            RotosolveConfig(phi_policy="zero", reuse=True)

    def test_no_rotations(self):
        with pytest.raises(ValidationError):
            rotosolve(Circuit(2).add_cz(0, 1), build_heisenberg(2))

    def test_from_json_file(self, tmp_path):
        path = tmp_path / "rotosolve.json"
        RotosolveConfig(phi_policy="random").to_json_file(str(path))
        assert Rotosolve.from_json_file(str(path)).config.phi_policy == "random"
