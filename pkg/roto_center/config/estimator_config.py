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

from .config import Config
from ..errors import ConfigError

class EstimatorConfig(Config):
    """
    This is a configuration class that stores how energies are estimated.
    ``shots_per_term = 0`` selects the exact statevector expectation; any positive value
    selects sampled estimation with that many simulated measurements per Hamiltonian term.

    For example:
    [`flat_threshold`] is the amplitude below which a sinusoid counts as flat in exact mode,
    [`sampled_flat_threshold`] plays the same role when energies are sampled.
    [`track_exact`] additionally records the exact energy next to every sampled one.
    """

    config_type = "estimator"

    def __init__(self, shots_per_term = 0,
                       seed = 0,
                       flat_threshold = 1e-9,
                       sampled_flat_threshold = 0.0,
                       track_exact = False,
                    ):

        super().__init__()

        if int(shots_per_term) != shots_per_term or shots_per_term < 0:
            raise ConfigError(f"shots_per_term must be a non-negative integer, got {shots_per_term!r}")
        if flat_threshold < 0 or sampled_flat_threshold < 0:
            raise ConfigError("flat thresholds must be non-negative")

        self.shots_per_term = int(shots_per_term)
        self.seed = int(seed)
        self.flat_threshold = float(flat_threshold)
        self.sampled_flat_threshold = float(sampled_flat_threshold)
        self.track_exact = bool(track_exact)

    @property
    def exact(self) -> bool:
        return self.shots_per_term == 0

    @property
    def effective_flat_threshold(self) -> float:
        return self.flat_threshold if self.exact else self.sampled_flat_threshold

    @classmethod
    def exact_mode(cls, **kwargs):
        return cls(shots_per_term=0, **kwargs)

    @classmethod
    def sampled(cls, shots_per_term, seed = 0, **kwargs):
        if shots_per_term < 1:
            raise ConfigError(f"sampled mode needs shots_per_term >= 1, got {shots_per_term}")
        return cls(shots_per_term=shots_per_term, seed=seed, **kwargs)
