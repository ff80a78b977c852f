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
r"""
Closed-form coordinate minimization of a single rotation angle.

With every other gate fixed, the energy as a function of one angle is
:math:`E(\theta) = A \sin(\theta + B) + C`. Three energies at :math:`\phi` and
:math:`\phi \pm \pi/2` determine :math:`A, B, C`, the minimizing angle and the minimum value.
"""

import math
from dataclasses import dataclass
from typing import Optional

from .utils.angles import wrap_angle
from .errors import ValidationError

HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class ProbeTriple:
    """ Energies at ``phi``, ``phi + pi/2`` and ``phi - pi/2``. """

    phi : float
    m_at_phi : float
    m_plus : float
    m_minus : float

    def __post_init__(self):
        for name in ("phi", "m_at_phi", "m_plus", "m_minus"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValidationError(f"probe {name} must be finite, got {value!r}")

    @property
    def numerator(self) -> float:
        return 2.0 * self.m_at_phi - self.m_plus - self.m_minus

    @property
    def denominator(self) -> float:
        return self.m_plus - self.m_minus


@dataclass(frozen=True)
class SinusoidFit:
    r""" :math:`E(\theta) = A \sin(\theta + B) + C` with :math:`A \ge 0` and :math:`B \in (-\pi, \pi]`. """

    amplitude : float
    phase : float
    intercept : float

    def predict(self, theta : float) -> float:
        return self.amplitude * math.sin(theta + self.phase) + self.intercept

    def argmin(self) -> float:
        return wrap_angle(-HALF_PI - self.phase)

    def is_flat(self, threshold : float) -> bool:
        return self.amplitude < threshold


def fit(probes : ProbeTriple) -> SinusoidFit:
    """ Amplitude, phase and intercept from three probes.

    The phase of a perfectly flat curve (both arctan2 arguments zero) is 0 by convention.
    """
    num = probes.numerator
    den = probes.denominator
    intercept = 0.5 * (probes.m_plus + probes.m_minus)
    amplitude = 0.5 * math.hypot(num, den)
    if num == 0.0 and den == 0.0:
        phase = 0.0
    else:
        phase = wrap_angle(math.atan2(num, den) - probes.phi)
    return SinusoidFit(amplitude, phase, intercept)


def optimal_angle(probes : ProbeTriple) -> float:
    r""" The global minimizer :math:`\phi - \pi/2 - \arctan2(2E_\phi - E_+ - E_-, E_+ - E_-)`, wrapped to (-pi, pi].

    For a flat curve any angle is optimal and the value returned is arbitrary; callers keep
    their current angle in that case.
    """
    return wrap_angle(probes.phi - HALF_PI - math.atan2(probes.numerator, probes.denominator))


def extrapolated_minimum(fit : SinusoidFit) -> float:
    """ ``-A + C``, the energy at the optimal angle. """
    return -fit.amplitude + fit.intercept


def probe_at_zero(theta : float, energy : float, m_plus : float, m_minus : float, cos_threshold : float = 1e-6) -> Optional[float]:
    r""" Recover :math:`E(0)` from :math:`E(\theta)` and the probes :math:`E(\pm\pi/2)`.

    Writing :math:`E(\theta) = s \sin\theta + c \cos\theta + C` gives :math:`C = (E_+ + E_-)/2`,
    :math:`s = (E_+ - E_-)/2` and :math:`c = (E(\theta) - C - s \sin\theta) / \cos\theta`, so
    :math:`E(0) = c + C`.

    Return:
        float or None: ``None`` when :math:`|\cos\theta|` is at most ``cos_threshold``.
    """
    cos_t = math.cos(theta)
    if abs(cos_t) <= cos_threshold:
        return None
    intercept = 0.5 * (m_plus + m_minus)
    sin_coeff = 0.5 * (m_plus - m_minus)
    cos_coeff = (energy - intercept - sin_coeff * math.sin(theta)) / cos_t
    return cos_coeff + intercept
