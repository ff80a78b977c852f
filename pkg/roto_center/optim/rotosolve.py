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
from typing import Optional

import numpy as np

from .base import CoordinateOptimizer, UpdateResult, probe
from .stopping import StoppingCriterion
from .trace import OptimizerTrace
from ..circuit import Circuit, ArbitraryAxis
from ..config import EstimatorConfig, RotosolveConfig
from ..estimator import Estimator, EvalCounter
from ..sinusoid import ProbeTriple, fit, optimal_angle, extrapolated_minimum
from ..utils.rng import stream, uniform_angle, uniform_unit_vector

HALF_PI = 0.5 * math.pi

# rng stream of the optimizer's own choices (random phi, random axes)
ROTOSOLVE_STREAM = 0x52534c56


def rotosolve_update(work : Circuit,
                     d : int,
                     estimator : Estimator,
                     config : Optional[RotosolveConfig] = None,
                     known_energy : Optional[float] = None,
                     rng : Optional[np.random.Generator] = None,
                    ) -> UpdateResult:
    """ Minimize the energy over the angle of rotation ``d`` in closed form.

    The gate's generator stays fixed (unless ``config.random_axis`` draws a new axis first).
    Three energies at ``phi`` and ``phi +- pi/2`` are measured; when ``config.reuse`` is on and
    ``known_energy`` (the energy of the circuit as it stands) is given, ``phi`` is the current
    angle and its probe is taken from ``known_energy``, so only two evaluations are spent.

    A flat sinusoid (amplitude under the estimator's flat threshold) keeps the current angle.

    Args:
        work (Circuit): the circuit, modified in place.
        d (int): index of the rotation gate.
        estimator (Estimator): energy oracle; its counter is charged for every probe.
        config (RotosolveConfig, optional): probe policy.
        known_energy (float, optional): energy of ``work`` before the update.
        rng (:obj:`numpy.random.Generator`, optional): source of random phi and random axes.

    Return:
        UpdateResult: the new angle and the extrapolated energy there.
    """
    config = RotosolveConfig() if config is None else config
    if rng is None:
        rng = stream(0, ROTOSOLVE_STREAM)
    if config.random_axis:
        work.set_gate(d, generator=ArbitraryAxis.from_vector(uniform_unit_vector(rng)))
    gate = work.rotation(d)
    theta = gate.angle
    prefix = estimator.prefix(work, d)
    start = estimator.evaluations

    if config.phi_policy == "current":
        phi = theta
    elif config.phi_policy == "zero":
        phi = 0.0
    else:
        phi = uniform_angle(rng)

    if config.reuse and known_energy is not None and config.phi_policy == "current":
        m_phi = known_energy
    else:
        m_phi = probe(work, d, estimator, prefix, phi)
    m_plus = probe(work, d, estimator, prefix, phi + HALF_PI)
    m_minus = probe(work, d, estimator, prefix, phi - HALF_PI)

    probes = ProbeTriple(phi, m_phi, m_plus, m_minus)
    curve = fit(probes)
    if curve.is_flat(estimator.flat_threshold):
        angle, energy, flat = theta, curve.predict(theta), True
    else:
        angle, energy, flat = optimal_angle(probes), extrapolated_minimum(curve), False
    work.set_gate(d, angle=angle)
    return UpdateResult(
        generator = gate.generator,
        angle = work.rotation(d).angle,
        energy = energy,
        evaluations = estimator.evaluations - start,
        flat = flat,
    )


class Rotosolve(CoordinateOptimizer):
    """ Coordinate descent over the rotation angles with fixed generators.

    Every update costs three energy evaluations, two with ``reuse`` after the first update
    of the run.
    """

    _CONFIG_TYPE = RotosolveConfig
    name = "rotosolve"

    def reuses_energy(self) -> bool:
        return self.config.reuse

    def _rng(self, seed : int):
        return stream(seed, ROTOSOLVE_STREAM)

    def update(self, work, d, estimator, known_energy, rng) -> UpdateResult:
        return rotosolve_update(work, d, estimator, self.config, known_energy, rng)


def rotosolve(circuit : Circuit,
              objective,
              config : Optional[EstimatorConfig] = None,
              stop : Optional[StoppingCriterion] = None,
              seed : int = 0,
              optimizer_config : Optional[RotosolveConfig] = None,
              counter : Optional[EvalCounter] = None,
             ) -> OptimizerTrace:
    """ Run :py:class:`Rotosolve` on ``circuit`` against a Hamiltonian (or target state).

    Args:
        circuit (Circuit): starting circuit, left untouched.
        objective (Hamiltonian, StateVector or Objective): what to minimize.
        config (EstimatorConfig, optional): exact (default) or sampled estimation.
        stop (StoppingCriterion, optional): defaults to 100 cycles.
        seed (int, optional): seed of random phi and random axes.
        optimizer_config (RotosolveConfig, optional): probe policy and reuse.
        counter (EvalCounter, optional): counter to charge.
    """
    estimator = Estimator(objective, config, counter)
    return Rotosolve(optimizer_config).minimize(circuit, estimator, stop, seed)
