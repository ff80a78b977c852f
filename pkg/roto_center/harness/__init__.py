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
from .states import trace_distance_pure, haar_random_state
from .record import RunRecord, TrialResult, RecordWriter, TRACE_COLUMNS
from .experiments import (
    TrialSpec, run_trial, run_trials, scaling_layers, evaluation_budget, STATE_PREP_BOUNDS, BASELINE_OPTIMIZERS,
    run_vqe, run_layer_sweep, run_comparison, run_scaling, run_state_prep, run_experiment,
)
