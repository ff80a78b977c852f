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

from typing import List, Optional
from .config import Config
from .estimator_config import EstimatorConfig
from .optimizer_config import RotosolveConfig, RotoselectConfig, AdamConfig, SPSAConfig
from ..errors import ConfigError

EXPERIMENTS = ("vqe", "compare", "scaling", "stateprep", "sweep-layers")
TASKS = ("vqe", "stateprep")
ANSATZE = ("layered", "circuit15")
OPTIMIZERS = ("rotosolve", "rotoselect", "adam", "spsa")


class ExperimentConfig(Config):
    """
    This is a configuration class that stores one experiment of the harness.
    It is echoed verbatim into every ``summary.json`` so that outputs are self-describing.

    For example:
    [`hamiltonian`] is either ``heisenberg`` (built from [`J`] and [`h`]) or a path to a
    Hamiltonian text file. [`shots`] equal to 0 selects exact energies.
    [`cycles`] is the cycle budget K1, [`no_improve`] an optional ``[K2, delta]`` pair and
    [`max_evals`] an optional cap on energy evaluations.
    [`layer_list`] and [`qubit_list`] drive the layer sweep and the scaling study.
    """

    config_type = "experiment"

    def __init__(self, experiment = "vqe",
                       task = "vqe",
                       hamiltonian = "heisenberg",
                       J = 1.0,
                       h = 1.0,
                       ansatz = "layered",
                       num_qubits = 5,
                       layers = 6,
                       optimizer = "rotoselect",
                       lr = 0.05,
                       spsa_a = 0.15,
                       spsa_c = 0.1,
                       spsa_alpha = 0.602,
                       spsa_gamma = 0.101,
                       spsa_stability = 0.0,
                       shots = 0,
                       trials = 10,
                       cycles = 1000,
                       no_improve : Optional[List[float]] = None,
                       max_evals : Optional[int] = None,
                       threshold = 0.02,
                       reuse = False,
                       phi_policy = "current",
                       random_axis = False,
                       track_exact = False,
                       layer_list : Optional[List[int]] = None,
                       qubit_list : Optional[List[int]] = None,
                       out = "runs",
                       seed = 0,
                       workers = 1,
                    ):

        super().__init__()

        self.experiment = experiment
        self.task = task
        self.hamiltonian = hamiltonian
        self.J = float(J)
        self.h = float(h)
        self.ansatz = ansatz
        self.num_qubits = int(num_qubits)
        self.layers = int(layers)
        self.optimizer = optimizer
        self.lr = float(lr)
        self.spsa_a = float(spsa_a)
        self.spsa_c = float(spsa_c)
        self.spsa_alpha = float(spsa_alpha)
        self.spsa_gamma = float(spsa_gamma)
        self.spsa_stability = float(spsa_stability)
        self.shots = int(shots)
        self.trials = int(trials)
        self.cycles = int(cycles)
        self.no_improve = list(no_improve) if no_improve is not None else None
        self.max_evals = int(max_evals) if max_evals is not None else None
        self.threshold = float(threshold)
        self.reuse = bool(reuse)
        self.phi_policy = phi_policy
        self.random_axis = bool(random_axis)
        self.track_exact = bool(track_exact)
        self.layer_list = [int(l) for l in layer_list] if layer_list is not None else None
        self.qubit_list = [int(q) for q in qubit_list] if qubit_list is not None else None
        self.out = str(out)
        self.seed = int(seed)
        self.workers = int(workers)

    def validate(self):
        """ Raise :py:class:`roto_center.errors.ConfigError` on any inconsistent field. """
        if self.experiment not in EXPERIMENTS:
            raise ConfigError(f"unknown experiment {self.experiment!r}, expected one of {EXPERIMENTS}")
        if self.task not in TASKS:
            raise ConfigError(f"unknown task {self.task!r}, expected one of {TASKS}")
        if self.ansatz not in ANSATZE:
            raise ConfigError(f"unknown ansatz {self.ansatz!r}, expected one of {ANSATZE}")
        if self.optimizer not in OPTIMIZERS:
            raise ConfigError(f"unknown optimizer {self.optimizer!r}, expected one of {OPTIMIZERS}")
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if self.layers < 1:
            raise ConfigError(f"layers must be >= 1, got {self.layers}")
        if self.cycles < 1:
            raise ConfigError(f"cycles must be >= 1, got {self.cycles}")
        if self.shots < 0:
            raise ConfigError(f"shots must be >= 0, got {self.shots}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.max_evals is not None and self.max_evals < 1:
            raise ConfigError(f"max_evals must be >= 1, got {self.max_evals}")
        if not 0 < self.threshold < 1:
            raise ConfigError(f"threshold must lie in (0, 1), got {self.threshold}")
        if self.no_improve is not None:
            if len(self.no_improve) != 2 or int(self.no_improve[0]) < 1 or self.no_improve[1] < 0:
                raise ConfigError(f"no_improve must be [K2 >= 1, delta >= 0], got {self.no_improve}")
        if self.experiment == "sweep-layers" and not self.layer_list:
            raise ConfigError("sweep-layers needs a non-empty layer list")
        if self.experiment == "scaling" and not self.qubit_list:
            raise ConfigError("scaling needs a non-empty qubit list")
        if self.layer_list is not None and any(l < 1 for l in self.layer_list):
            raise ConfigError(f"every layer count must be >= 1, got {self.layer_list}")
        if self.qubit_list is not None and any(q < 2 for q in self.qubit_list):
            raise ConfigError(f"every qubit count must be >= 2, got {self.qubit_list}")
        min_qubits = 3 if self.ansatz == "circuit15" else 2
        if self.experiment in ("vqe", "compare", "sweep-layers") and self.num_qubits < min_qubits:
            raise ConfigError(f"ansatz {self.ansatz!r} needs at least {min_qubits} qubits, got {self.num_qubits}")
        if self.task == "vqe" and self.hamiltonian == "heisenberg" and self.num_qubits < 2:
            raise ConfigError("the Heisenberg chain needs at least 2 qubits")
        # the optimizer configs carry their own checks
        self.rotosolve_config()
        self.rotoselect_config()
        self.adam_config()
        self.spsa_config()
        return self

    def estimator_config(self, seed : int = None) -> EstimatorConfig:
        seed = self.seed if seed is None else seed
        if self.shots == 0:
            return EstimatorConfig.exact_mode(seed=seed, track_exact=self.track_exact)
        return EstimatorConfig.sampled(self.shots, seed=seed, track_exact=self.track_exact)

    def rotosolve_config(self) -> RotosolveConfig:
        return RotosolveConfig(phi_policy=self.phi_policy, reuse=self.reuse, random_axis=self.random_axis)

    def rotoselect_config(self) -> RotoselectConfig:
        return RotoselectConfig(reuse=self.reuse)

    def adam_config(self) -> AdamConfig:
        return AdamConfig(lr=self.lr)

    def spsa_config(self) -> SPSAConfig:
        return SPSAConfig(
            a = self.spsa_a,
            c = self.spsa_c,
            alpha = self.spsa_alpha,
            gamma = self.spsa_gamma,
            stability = self.spsa_stability,
        )

    def optimizer_config(self, name : str = None) -> Config:
        name = self.optimizer if name is None else name
        if name == "rotosolve":
            return self.rotosolve_config()
        if name == "rotoselect":
            return self.rotoselect_config()
        if name == "adam":
            return self.adam_config()
        if name == "spsa":
            return self.spsa_config()
        raise ConfigError(f"unknown optimizer {name!r}")
