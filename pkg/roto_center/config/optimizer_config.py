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

PHI_POLICIES = ("current", "random", "zero")


class RotosolveConfig(Config):
    """
    Configuration of the Rotosolve coordinate optimizer.

    [`phi_policy`] picks the probe offset of every update: ``current`` uses the gate's
    present angle, ``random`` draws it uniformly from (-pi, pi], ``zero`` uses 0.
    [`reuse`] feeds the energy of the previous update back as the probe at phi, so that
    an update costs 2 evaluations instead of 3. It requires ``phi_policy = current``.
    [`random_axis`] samples a fresh unit rotation axis before every update.
    """

    config_type = "rotosolve"

    def __init__(self, phi_policy = "current",
                       reuse = False,
                       random_axis = False,
                    ):

        super().__init__()

        if phi_policy not in PHI_POLICIES:
            raise ConfigError(f"unknown phi_policy {phi_policy!r}, expected one of {PHI_POLICIES}")
        if reuse and phi_policy != "current":
            raise ConfigError("evaluation reuse needs phi_policy = 'current'")
        if reuse and random_axis:
            raise ConfigError("evaluation reuse cannot be combined with random_axis")

        self.phi_policy = phi_policy
        self.reuse = bool(reuse)
        self.random_axis = bool(random_axis)


class RotoselectConfig(Config):
    """
    Configuration of the Rotoselect structure optimizer.

    [`reuse`] recovers the shared probe at angle 0 from the previous update's energy,
    bringing an update from 7 to 6 evaluations.
    [`cos_threshold`] is the bound on ``|cos(theta_d)|`` under which that recovery is
    singular and the 7-evaluation path is taken instead.
    [`tie_tolerance`] is the energy window inside which two generators count as tied.
    """

    config_type = "rotoselect"

    def __init__(self, reuse = False,
                       cos_threshold = 1e-6,
                       tie_tolerance = 1e-12,
                    ):

        super().__init__()

        if cos_threshold < 0 or tie_tolerance < 0:
            raise ConfigError("cos_threshold and tie_tolerance must be non-negative")

        self.reuse = bool(reuse)
        self.cos_threshold = float(cos_threshold)
        self.tie_tolerance = float(tie_tolerance)


class AdamConfig(Config):
    """ Adam over parameter-shift gradients. Only ``lr`` is fixed by the benchmark (0.05). """

    config_type = "adam"

    def __init__(self, lr = 0.05,
                       beta1 = 0.9,
                       beta2 = 0.999,
                       eps = 1e-8,
                    ):

        super().__init__()

        if lr <= 0:
            raise ConfigError(f"learning rate must be positive, got {lr}")
        if not (0 <= beta1 < 1 and 0 <= beta2 < 1):
            raise ConfigError(f"betas must lie in [0, 1), got ({beta1}, {beta2})")

        self.lr = float(lr)
        self.beta1 = float(beta1)
        self.beta2 = float(beta2)
        self.eps = float(eps)


class SPSAConfig(Config):
    """
    SPSA gain sequences ``a_k = a / (k + 1 + stability)^alpha`` and ``c_k = c / (k + 1)^gamma``.
    The defaults follow the commonly published guidelines (alpha = 0.602, gamma = 0.101).
    """

    config_type = "spsa"

    def __init__(self, a = 0.15,
                       c = 0.1,
                       alpha = 0.602,
                       gamma = 0.101,
                       stability = 0.0,
                    ):

        super().__init__()

        if a <= 0 or c <= 0:
            raise ConfigError(f"SPSA gains must be positive, got a={a}, c={c}")
        if stability < 0:
            raise ConfigError(f"SPSA stability constant must be non-negative, got {stability}")

        self.a = float(a)
        self.c = float(c)
        self.alpha = float(alpha)
        self.gamma = float(gamma)
        self.stability = float(stability)
