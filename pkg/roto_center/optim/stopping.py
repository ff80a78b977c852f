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
from typing import List, Optional

from ..errors import ConfigError


class StoppingCriterion:
    """ Decides when an optimizer run ends.

    Optimizers call :py:meth:`check_update` after every recorded update and
    :py:meth:`check_cycle` after every completed cycle (for gradient optimizers, every step).
    Both receive the running :py:class:`~roto_center.optim.OptimizerTrace`, which exposes
    ``cycles``, ``evaluations``, ``best_energy``, ``best_exact`` and ``cycle_bests``.
    """

    def check_update(self, progress) -> bool:
        return False

    def check_cycle(self, progress) -> bool:
        return False

    @property
    def reason(self) -> str:
        return repr(self)

    def __repr__(self):
        return type(self).__name__ + "()"

    def __or__(self, other : "StoppingCriterion") -> "AnyOf":
        return AnyOf(self, other)


class MaxCycles(StoppingCriterion):
    """ Stop after exactly ``k1`` completed cycles. """

    def __init__(self, k1 : int):
        if int(k1) != k1 or k1 < 1:
            raise ConfigError(f"the cycle budget must be a positive integer, got {k1!r}")
        self.k1 = int(k1)

    def check_cycle(self, progress) -> bool:
        return progress.cycles >= self.k1

    def __repr__(self):
        return f"MaxCycles({self.k1})"


class NoImprovement(StoppingCriterion):
    """ Stop once the best energy has dropped by less than ``min_decrease`` in each of the
    last ``k2`` consecutive cycles. """

    def __init__(self, k2 : int, min_decrease : float = 0.0):
        if int(k2) != k2 or k2 < 1:
            raise ConfigError(f"K2 must be a positive integer, got {k2!r}")
        if not min_decrease >= 0:
            raise ConfigError(f"the minimum decrease must be non-negative, got {min_decrease!r}")
        self.k2 = int(k2)
        self.min_decrease = float(min_decrease)

    def check_cycle(self, progress) -> bool:
        bests : List[float] = progress.cycle_bests
        if len(bests) < self.k2:
            return False
        previous = [progress.initial_energy] + bests[:-1]
        recent = list(zip(previous, bests))[-self.k2:]
        return all(before - after < self.min_decrease for before, after in recent)

    def __repr__(self):
        return f"NoImprovement({self.k2}, {self.min_decrease})"


class MaxEvaluations(StoppingCriterion):
    """ Stop as soon as ``limit`` energy evaluations have been spent, even mid-cycle. """

    def __init__(self, limit : int):
        if int(limit) != limit or limit < 1:
            raise ConfigError(f"the evaluation limit must be a positive integer, got {limit!r}")
        self.limit = int(limit)

    def check_update(self, progress) -> bool:
        return progress.evaluations >= self.limit

    check_cycle = check_update

    def __repr__(self):
        return f"MaxEvaluations({self.limit})"


class TargetEnergy(StoppingCriterion):
    """ Stop once the best energy is at or below ``energy``.

    The exact shadow energy is preferred when the trace carries one.
    """

    def __init__(self, energy : float):
        if not math.isfinite(energy):
            raise ConfigError(f"target energy must be finite, got {energy!r}")
        self.energy = float(energy)

    def check_update(self, progress) -> bool:
        best = progress.best_exact if progress.best_exact is not None else progress.best_energy
        return best is not None and best <= self.energy

    check_cycle = check_update

    def __repr__(self):
        return f"TargetEnergy({self.energy})"


class AnyOf(StoppingCriterion):
    """ Stop when any of the wrapped criteria fires; :py:attr:`fired` names the first one. """

    def __init__(self, *criteria : StoppingCriterion):
        if not criteria:
            raise ConfigError("AnyOf needs at least one criterion")
        flat = []
        for c in criteria:
            flat.extend(c.criteria if isinstance(c, AnyOf) else [c])
        self.criteria = tuple(flat)
        self.fired : Optional[StoppingCriterion] = None

    def check_update(self, progress) -> bool:
        return self._first(lambda c: c.check_update(progress))

    def check_cycle(self, progress) -> bool:
        return self._first(lambda c: c.check_cycle(progress))

    def _first(self, test) -> bool:
        for c in self.criteria:
            if test(c):
                self.fired = c
                return True
        return False

    @property
    def reason(self) -> str:
        return repr(self.fired) if self.fired is not None else "AnyOf"

    def __repr__(self):
        return "AnyOf(" + ", ".join(repr(c) for c in self.criteria) + ")"


def build_stopping(cycles : Optional[int], no_improve = None, max_evals : Optional[int] = None, target : Optional[float] = None) -> StoppingCriterion:
    """ Combine the cycle budget with the optional criteria of an experiment.

    ``cycles=None`` drops the cycle cap, leaving an evaluation budget or target to end the run.
    """
    criteria = [] if cycles is None else [MaxCycles(cycles)]
    if no_improve is not None:
        criteria.append(NoImprovement(int(no_improve[0]), float(no_improve[1])))
    if max_evals is not None:
        criteria.append(MaxEvaluations(max_evals))
    if target is not None:
        criteria.append(TargetEnergy(target))
    if not criteria:
        raise ConfigError("a run needs a cycle budget, an evaluation budget or a target energy")
    return criteria[0] if len(criteria) == 1 else AnyOf(*criteria)
