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
from .stopping import StoppingCriterion, MaxCycles, NoImprovement, MaxEvaluations, TargetEnergy, AnyOf, build_stopping
from .trace import StepRecord, OptimizerTrace
from .base import BaseOptimizer, CoordinateOptimizer, UpdateResult
from .rotosolve import Rotosolve, rotosolve, rotosolve_update
from .rotoselect import Rotoselect, rotoselect, rotoselect_update
from .gradient import parameter_shift_gradient
from .adam import Adam, adam
from .spsa import SPSA, spsa

OPTIMIZER_CLASSES = {
    "rotosolve": Rotosolve,
    "rotoselect": Rotoselect,
    "adam": Adam,
    "spsa": SPSA,
}
