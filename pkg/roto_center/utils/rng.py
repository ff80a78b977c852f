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

_SEED_MOD = 1 << 63

def seed_sequence(seed : int, *key : int) -> np.random.SeedSequence:
    """ Deterministic child stream of ``seed`` addressed by the integer path ``key``.

    Streams with different keys are statistically independent, which lets evaluations,
    Hamiltonian terms and trials draw in any order (or in parallel) and stay reproducible.
    """
    return np.random.SeedSequence(entropy=int(seed) % _SEED_MOD, spawn_key=tuple(int(k) for k in key))

def stream(seed : int, *key : int) -> np.random.Generator:
    return np.random.default_rng(seed_sequence(seed, *key))

def derive_seed(seed : int, *key : int) -> int:
    return int(seed_sequence(seed, *key).generate_state(1, dtype=np.uint64)[0] % _SEED_MOD)

def uniform_angle(rng : np.random.Generator) -> float:
    """ Uniform draw from the half-open interval (-pi, pi]. """
    return math.pi - rng.uniform(0.0, 2 * math.pi)

def uniform_unit_vector(rng : np.random.Generator):
    """ Uniform draw from the unit sphere in three dimensions. """
    while True:
        v = rng.standard_normal(3)
        norm = float(np.linalg.norm(v))
        if norm > 1e-12:
            return tuple(float(x) / norm for x in v)
