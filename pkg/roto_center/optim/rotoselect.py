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
import logging
from typing import Dict, List, Optional, Tuple

from .base import CoordinateOptimizer, UpdateResult, probe
from .stopping import StoppingCriterion
from .trace import OptimizerTrace
from ..circuit import Circuit, PauliGenerator, PAULI_GENERATORS
from ..config import EstimatorConfig, RotoselectConfig
from ..estimator import Estimator, EvalCounter
from ..sinusoid import ProbeTriple, fit, optimal_angle, extrapolated_minimum, probe_at_zero
from ..errors import ValidationError

logger = logging.getLogger(__name__)

HALF_PI = 0.5 * math.pi


def _candidate(probes : ProbeTriple, theta : float, flat_threshold : float) -> Tuple[float, float, bool]:
    curve = fit(probes)
    if curve.is_flat(flat_threshold):
        return theta, curve.predict(theta), True
    return optimal_angle(probes), extrapolated_minimum(curve), False


def rotoselect_update(work : Circuit,
                      d : int,
                      estimator : Estimator,
                      config : Optional[RotoselectConfig] = None,
                      known_energy : Optional[float] = None,
                     ) -> UpdateResult:
    """ Choose the generator of rotation ``d`` from ``{X, Y, Z}`` together with its best angle.

    All three candidates are probed at ``phi = 0``, where the gate is the identity whatever
    its generator, so the probe at 0 is shared: 1 + 3 * 2 = 7 evaluations. With
    ``config.reuse`` and a ``known_energy`` for the circuit as it stands, the shared probe is
    recovered from the current generator's two probes instead, for 6 evaluations; when
    ``|cos(theta_d)|`` is at most ``config.cos_threshold`` that recovery is singular and the
    7-evaluation path runs, with ``fallback`` set on the result.

    Ties within ``config.tie_tolerance`` go to the current generator, then to X, Y, Z in
    that order.

    Args:
        work (Circuit): the circuit, modified in place.
        d (int): index of the rotation gate; its generator must be X, Y or Z.
        estimator (Estimator): energy oracle.
        config (RotoselectConfig, optional): reuse and tie settings.
        known_energy (float, optional): energy of ``work`` before the update.
    """
    config = RotoselectConfig() if config is None else config
    gate = work.rotation(d)
    current = gate.generator
    if not isinstance(current, PauliGenerator):
        raise ValidationError(f"rotoselect needs a Pauli generator on rotation {d}, found {current}")
    theta = gate.angle
    prefix = estimator.prefix(work, d)
    start = estimator.evaluations
    threshold = estimator.flat_threshold

    shifted : Dict[PauliGenerator, Tuple[float, float]] = {}
    m_zero = None
    fallback = False
    if config.reuse and known_energy is not None:
        m_plus = probe(work, d, estimator, prefix, HALF_PI, current)
        m_minus = probe(work, d, estimator, prefix, -HALF_PI, current)
        shifted[current] = (m_plus, m_minus)
        m_zero = probe_at_zero(theta, known_energy, m_plus, m_minus, config.cos_threshold)
        if m_zero is None:
            fallback = True
            logger.debug("rotation %d at angle %.3g is singular for reuse, measuring the shared probe", d, theta)
    if m_zero is None:
        m_zero = probe(work, d, estimator, prefix, 0.0)
    for generator in PAULI_GENERATORS:
        if generator in shifted:
            continue
        m_plus = probe(work, d, estimator, prefix, HALF_PI, generator)
        m_minus = probe(work, d, estimator, prefix, -HALF_PI, generator)
        shifted[generator] = (m_plus, m_minus)

    order : List[PauliGenerator] = [current] + [g for g in PAULI_GENERATORS if g != current]
    best = None
    for generator in order:
        m_plus, m_minus = shifted[generator]
        angle, energy, flat = _candidate(ProbeTriple(0.0, m_zero, m_plus, m_minus), theta, threshold)
        if best is None or energy < best[2] - config.tie_tolerance:
            best = (generator, angle, energy, flat)

    generator, angle, energy, flat = best
    work.set_gate(d, generator=generator, angle=angle)
    return UpdateResult(
        generator = generator,
        angle = work.rotation(d).angle,
        energy = energy,
        evaluations = estimator.evaluations - start,
        flat = flat,
        fallback = fallback,
    )


class Rotoselect(CoordinateOptimizer):
    """ Coordinate descent over both the angle and the Pauli generator of every rotation. """

    _CONFIG_TYPE = RotoselectConfig
    name = "rotoselect"

    def reuses_energy(self) -> bool:
        return self.config.reuse

    def _rng(self, seed : int):
        return None

    def update(self, work, d, estimator, known_energy, rng) -> UpdateResult:
        return rotoselect_update(work, d, estimator, self.config, known_energy)


def rotoselect(circuit : Circuit,
               objective,
               config : Optional[EstimatorConfig] = None,
               stop : Optional[StoppingCriterion] = None,
               seed : int = 0,
               optimizer_config : Optional[RotoselectConfig] = None,
               counter : Optional[EvalCounter] = None,
              ) -> OptimizerTrace:
    """ Run :py:class:`Rotoselect`; arguments as for :py:func:`~roto_center.optim.rotosolve`. """
    estimator = Estimator(objective, config, counter)
    return Rotoselect(optimizer_config).minimize(circuit, estimator, stop, seed)
