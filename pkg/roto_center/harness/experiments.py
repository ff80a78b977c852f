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

import logging
import multiprocessing
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence

import torch
from tqdm import tqdm

from .record import RunRecord, TrialResult
from .states import haar_random_state, trace_distance_pure
from ..circuit import Circuit, build_layered_ansatz, build_circuit15
from ..config import ExperimentConfig
from ..estimator import Estimator, HamiltonianObjective, OverlapObjective
from ..optim import OPTIMIZER_CLASSES, build_stopping
from ..pauli import Hamiltonian, build_heisenberg, load_hamiltonian, exact_spectrum_bounds, SpectrumBounds, MAX_SPECTRUM_QUBITS
from ..utils.rng import derive_seed
from ..errors import ConfigError

logger = logging.getLogger(__name__)

# keys of the per-trial seed streams
INIT_STREAM = 1
OPTIMIZER_STREAM = 2
ESTIMATOR_STREAM = 3
TARGET_STREAM = 4

# -|<target|psi>|^2 ranges over [-1, 0]
STATE_PREP_BOUNDS = SpectrumBounds(-1.0, 0.0)
STATE_PREP_QUBITS = 4
STATE_PREP_LAYERS = tuple(range(1, 8))

BASELINE_OPTIMIZERS = ("rotosolve", "rotoselect", "adam", "spsa")
# evaluations of one Rotoselect gate update, the unit of the default shared budget
ROTOSELECT_UPDATE_EVALS = 7


def scaling_layers(n : int) -> int:
    """ Circuit depth of the scaling study: ``3n^2/2 + 2n`` for even ``n``, ``3(n^2-1)/2 + 2n`` for odd ``n``. """
    if n % 2 == 0:
        return 3 * n * n // 2 + 2 * n
    return 3 * (n * n - 1) // 2 + 2 * n


@dataclass(frozen=True)
class TrialSpec:
    """ Everything a worker needs to run one trial besides the experiment config.

    ``replicate`` selects the seeds within a ``(num_qubits, layers)`` cell, so two
    optimizers with the same replicate start from the same circuit.
    """

    trial : int
    optimizer : str
    num_qubits : int
    layers : int
    replicate : int
    target_index : int = 0
    bounds : Optional[SpectrumBounds] = None
    stop_at_threshold : bool = False
    evaluation_budget : Optional[int] = None


def build_hamiltonian(cfg : ExperimentConfig, num_qubits : Optional[int] = None) -> Hamiltonian:
    """ ``heisenberg`` builds the ring from ``J`` and ``h``; anything else is a file path or sample name. """
    if cfg.hamiltonian == "heisenberg":
        return build_heisenberg(cfg.num_qubits if num_qubits is None else num_qubits, cfg.J, cfg.h)
    ham = load_hamiltonian(cfg.hamiltonian)
    if num_qubits is not None and ham.num_qubits != num_qubits:
        raise ConfigError(f"{cfg.hamiltonian} acts on {ham.num_qubits} qubits, the experiment needs {num_qubits}")
    return ham


def build_ansatz(cfg : ExperimentConfig, num_qubits : int, layers : int, init_seed : int) -> Circuit:
    if cfg.ansatz == "circuit15":
        return build_circuit15(num_qubits, layers, init_seed)
    return build_layered_ansatz(num_qubits, layers, init_seed)


def spectrum_of(ham : Hamiltonian) -> Optional[SpectrumBounds]:
    if ham.num_qubits > MAX_SPECTRUM_QUBITS:
        logger.warning("no spectrum bounds for %d qubits, dense diagonalization is capped at %d",
                       ham.num_qubits, MAX_SPECTRUM_QUBITS)
        return None
    return exact_spectrum_bounds(ham)


def target_state(cfg : ExperimentConfig, target_index : int):
    return haar_random_state(cfg.num_qubits, derive_seed(cfg.seed, TARGET_STREAM, target_index))


def trial_seeds(cfg : ExperimentConfig, spec : TrialSpec) -> Dict[str, int]:
    key = (spec.num_qubits, spec.layers, spec.replicate)
    return {
        "init": derive_seed(cfg.seed, INIT_STREAM, *key),
        "optimizer": derive_seed(cfg.seed, OPTIMIZER_STREAM, *key),
        "estimator": derive_seed(cfg.seed, ESTIMATOR_STREAM, *key),
    }


def run_trial(cfg : ExperimentConfig, spec : TrialSpec) -> TrialResult:
    """ Run one seeded trial. The result depends on ``(cfg, spec)`` only, so workers may run trials in any order. """
    seeds = trial_seeds(cfg, spec)
    target = None
    if cfg.task == "stateprep":
        target = target_state(cfg, spec.target_index)
        objective = OverlapObjective(target)
    else:
        objective = HamiltonianObjective(build_hamiltonian(cfg, spec.num_qubits))

    circuit = build_ansatz(cfg, spec.num_qubits, spec.layers, seeds["init"])
    threshold = None
    if spec.bounds is not None:
        threshold = spec.bounds.e_min + cfg.threshold * spec.bounds.width
    target_energy = threshold if spec.stop_at_threshold else None
    if spec.evaluation_budget is None:
        stop = build_stopping(cfg.cycles, cfg.no_improve, cfg.max_evals, target_energy)
    else:
        stop = build_stopping(None, max_evals=spec.evaluation_budget, target=target_energy)
    optimizer = OPTIMIZER_CLASSES[spec.optimizer](cfg.optimizer_config(spec.optimizer))
    estimator = Estimator(objective, cfg.estimator_config(seeds["estimator"]))
    trace = optimizer.minimize(circuit, estimator, stop, seeds["optimizer"])

    metrics = {}
    best = trace.best_exact if trace.best_exact is not None else trace.best_energy
    if spec.bounds is not None:
        metrics["normalized_distance"] = spec.bounds.normalized_distance(best)
        metrics["evaluations_to_threshold"] = trace.evaluations_to(threshold)
    if spec.evaluation_budget is not None:
        metrics["evaluation_budget"] = spec.evaluation_budget
    if target is not None:
        metrics["target_index"] = spec.target_index
        metrics["trace_distance"] = trace_distance_pure(target, trace.final_circuit.evaluate())
    if spec.optimizer == "rotoselect":
        metrics["generator_changes_per_cycle"] = trace.generator_changes_per_cycle()
    return TrialResult(
        trial = spec.trial,
        optimizer = spec.optimizer,
        num_qubits = spec.num_qubits,
        layers = spec.layers,
        seeds = seeds,
        summary = trace.summary(),
        rows = [(r.cycle, r.gate_index, r.cumulative_evals, r.energy, r.exact_energy, r.generator) for r in trace.records],
        metrics = metrics,
    )


def _init_worker():
    torch.set_num_threads(1)


def _run_job(job):
    return run_trial(*job)


def run_trials(cfg : ExperimentConfig, specs : Sequence[TrialSpec], record : RunRecord, quiet : bool = False) -> RunRecord:
    """ Run ``specs`` on ``cfg.workers`` processes; results land in ``record`` in trial order. """
    jobs = [(cfg, spec) for spec in specs]
    with tqdm(total=len(jobs), desc=record.experiment, disable=quiet) as bar:
        if cfg.workers > 1 and len(jobs) > 1:
            with multiprocessing.Pool(min(cfg.workers, len(jobs)), initializer=_init_worker) as pool:
                for result in pool.imap(_run_job, jobs):
                    record.add(result)
                    bar.update(1)
        else:
            for job in jobs:
                record.add(_run_job(job))
                bar.update(1)
    return record


def _problem_bounds(cfg : ExperimentConfig, record : RunRecord, num_qubits : int) -> Optional[SpectrumBounds]:
    if cfg.task == "stateprep":
        bounds = STATE_PREP_BOUNDS
    else:
        bounds = spectrum_of(build_hamiltonian(cfg, num_qubits))
    if bounds is not None:
        record.spectrum[num_qubits] = bounds.to_dict()
    return bounds


def _problem_qubits(cfg : ExperimentConfig) -> int:
    if cfg.task == "vqe" and cfg.hamiltonian != "heisenberg":
        return build_hamiltonian(cfg).num_qubits
    return cfg.num_qubits


def _grid(optimizers : Iterable[str], num_qubits : int, layer_list : Iterable[int], trials : int, bounds : Optional[SpectrumBounds]) -> List[TrialSpec]:
    specs = []
    for layers in layer_list:
        for name in optimizers:
            for r in range(trials):
                specs.append(TrialSpec(len(specs), name, num_qubits, layers, r, target_index=r, bounds=bounds))
    return specs


def run_vqe(cfg : ExperimentConfig, quiet : bool = False) -> RunRecord:
    """ ``cfg.trials`` runs of ``cfg.optimizer`` with ``cfg.layers`` layers. """
    record = RunRecord("vqe", cfg.to_dict())
    n = _problem_qubits(cfg)
    bounds = _problem_bounds(cfg, record, n)
    run_trials(cfg, _grid([cfg.optimizer], n, [cfg.layers], cfg.trials, bounds), record, quiet)
    record.close()
    return record


def run_layer_sweep(cfg : ExperimentConfig, layer_list : Optional[Sequence[int]] = None, quiet : bool = False) -> RunRecord:
    """ Rotosolve and Rotoselect at every layer count, ``cfg.trials`` seeds each. """
    layer_list = list(cfg.layer_list or []) if layer_list is None else list(layer_list)
    if not layer_list:
        raise ConfigError("the layer sweep needs a non-empty layer list")
    record = RunRecord("sweep-layers", cfg.to_dict())
    n = _problem_qubits(cfg)
    bounds = _problem_bounds(cfg, record, n)
    run_trials(cfg, _grid(("rotosolve", "rotoselect"), n, layer_list, cfg.trials, bounds), record, quiet)
    record.close()
    return record


def evaluation_budget(cfg : ExperimentConfig, num_qubits : int, layers : int) -> int:
    """ Shared evaluation budget of one trial in the multi-optimizer studies.

    ``cfg.max_evals`` when set, else the cost of ``cfg.cycles`` full Rotoselect cycles,
    ``7 D cfg.cycles``. Every optimizer gets the same budget whatever one of its cycles costs.
    """
    if cfg.max_evals is not None:
        return cfg.max_evals
    num_parameters = build_ansatz(cfg, num_qubits, layers, 0).num_parameters
    return cfg.cycles * ROTOSELECT_UPDATE_EVALS * num_parameters


def run_comparison(cfg : ExperimentConfig, optimizers : Sequence[str] = BASELINE_OPTIMIZERS, quiet : bool = False) -> RunRecord:
    """ Every optimizer from the same starting circuits, on a shared evaluation budget.

    A trial ends when it has spent :py:func:`evaluation_budget` evaluations or reached the
    ``cfg.threshold`` normalized distance; the trace gives energy against evaluations.
    """
    record = RunRecord("compare", cfg.to_dict())
    n = _problem_qubits(cfg)
    bounds = _problem_bounds(cfg, record, n)
    budget = evaluation_budget(cfg, n, cfg.layers)
    logger.info("comparison budget: %d evaluations per trial", budget)
    specs = []
    for name in optimizers:
        for r in range(cfg.trials):
            specs.append(TrialSpec(len(specs), name, n, cfg.layers, r, target_index=r, bounds=bounds,
                                   stop_at_threshold=bounds is not None, evaluation_budget=budget))
    run_trials(cfg, specs, record, quiet)
    record.close()
    return record


def run_scaling(cfg : ExperimentConfig, qubit_list : Optional[Sequence[int]] = None, optimizers : Sequence[str] = BASELINE_OPTIMIZERS, quiet : bool = False) -> RunRecord:
    """ Evaluations until the normalized distance reaches ``cfg.threshold``, per qubit count and optimizer.

    Each size runs the layered ansatz at :py:func:`scaling_layers` depth on the Heisenberg
    ring. Replicate ``r`` starts every optimizer from the same circuit, and each trial stops
    at the threshold or after its :py:func:`evaluation_budget`. In sampled mode the
    threshold is judged on the exact shadow energy, which is switched on here.
    """
    qubit_list = list(cfg.qubit_list or []) if qubit_list is None else list(qubit_list)
    if not qubit_list:
        raise ConfigError("the scaling study needs a non-empty qubit list")
    if not optimizers:
        raise ConfigError("the scaling study needs at least one optimizer")
    if cfg.hamiltonian != "heisenberg" or cfg.task != "vqe":
        raise ConfigError("the scaling study runs on the Heisenberg ring, set hamiltonian to 'heisenberg'")
    cfg = ExperimentConfig.from_dict(cfg.to_dict())
    cfg.ansatz = "layered"
    cfg.track_exact = True
    record = RunRecord("scaling", cfg.to_dict())
    specs = []
    for n in qubit_list:
        bounds = _problem_bounds(cfg, record, n)
        if bounds is None:
            raise ConfigError(f"the scaling study needs exact bounds, {n} qubits is above the cap of {MAX_SPECTRUM_QUBITS}")
        layers = scaling_layers(n)
        budget = evaluation_budget(cfg, n, layers)
        for name in optimizers:
            for r in range(cfg.trials):
                specs.append(TrialSpec(len(specs), name, n, layers, r, bounds=bounds,
                                       stop_at_threshold=True, evaluation_budget=budget))
    run_trials(cfg, specs, record, quiet)
    record.close()
    return record


def run_state_prep(cfg : ExperimentConfig, layer_list : Optional[Sequence[int]] = None, quiet : bool = False) -> RunRecord:
    """ Prepare ``cfg.trials`` Haar-random targets on four qubits with circuit #15.

    Target ``t`` is shared by every layer count and both optimizers. The objective is
    ``-|<target|psi>|^2``; the figure of merit is the trace distance of the final state.
    """
    if layer_list is None:
        layer_list = cfg.layer_list or STATE_PREP_LAYERS
    cfg = ExperimentConfig.from_dict(cfg.to_dict())
    cfg.task = "stateprep"
    cfg.ansatz = "circuit15"
    cfg.num_qubits = STATE_PREP_QUBITS
    record = RunRecord("stateprep", cfg.to_dict())
    bounds = _problem_bounds(cfg, record, cfg.num_qubits)
    run_trials(cfg, _grid(("rotosolve", "rotoselect"), cfg.num_qubits, layer_list, cfg.trials, bounds), record, quiet)
    record.close()
    return record


def run_experiment(cfg : ExperimentConfig, quiet : bool = False) -> RunRecord:
    """ Validate ``cfg`` and dispatch on ``cfg.experiment``. """
    cfg.validate()
    logger.info("running %s with seed %d on %d worker(s)", cfg.experiment, cfg.seed, cfg.workers)
    if cfg.experiment == "vqe":
        return run_vqe(cfg, quiet)
    if cfg.experiment == "sweep-layers":
        return run_layer_sweep(cfg, quiet=quiet)
    if cfg.experiment == "compare":
        return run_comparison(cfg, quiet=quiet)
    if cfg.experiment == "scaling":
        return run_scaling(cfg, quiet=quiet)
    return run_state_prep(cfg, quiet=quiet)
