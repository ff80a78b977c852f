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

import argparse

from .config import ExperimentConfig, EXPERIMENTS, TASKS, ANSATZE, OPTIMIZERS, PHI_POLICIES

# desk-scale defaults of each subcommand, applied over the flag defaults
COMMAND_DEFAULTS = {
    "vqe": {},
    "compare": {"layers": 30, "trials": 5, "cycles": 200, "threshold": 0.05},
    "scaling": {"shots": 1000, "cycles": 10000, "max_evals": 200000, "qubit_list": [2, 3, 4, 5, 6]},
    "stateprep": {"qubits": 4, "ansatz": "circuit15", "task": "stateprep", "cycles": 50,
                  "layer_list": [1, 2, 3, 4, 5, 6, 7]},
    "sweep-layers": {"layer_list": [6, 9, 12, 15]},
}

HELP = {
    "vqe": "minimize a Hamiltonian with one optimizer",
    "compare": "run every optimizer on the same problem",
    "scaling": "evaluations each optimizer needs to reach the energy threshold against the number of qubits",
    "stateprep": "prepare random target states with circuit #15",
    "sweep-layers": "Rotosolve and Rotoselect across circuit depths",
}


def add_problem_args(parser: argparse.ArgumentParser):
    """Problem arguments"""

    group = parser.add_argument_group('problem', 'objective and circuit')
    group.add_argument('--task', type=str, default='vqe', choices=TASKS,
                       help='minimize a Hamiltonian or prepare a target state')
    group.add_argument('--hamiltonian', type=str, default='heisenberg',
                       help='"heisenberg", a packaged sample name or a path to a Hamiltonian text file')
    group.add_argument('--J', type=float, default=1.0,
                       help='Heisenberg coupling')
    group.add_argument('--h', type=float, default=1.0,
                       help='Heisenberg field strength')
    group.add_argument('--qubits', type=int, default=5,
                       help='number of qubits')
    group.add_argument('--layers', type=int, default=6,
                       help='number of ansatz layers')
    group.add_argument('--ansatz', type=str, default='layered', choices=ANSATZE,
                       help='circuit family')
    return parser


def add_optimizer_args(parser: argparse.ArgumentParser):
    """Optimizer arguments."""

    group = parser.add_argument_group('optimizer', 'optimizer configurations')
    group.add_argument('--optimizer', type=str, default='rotoselect', choices=OPTIMIZERS,
                       help='optimizer of the vqe and scaling runs')
    group.add_argument('--reuse', action='store_true',
                       help='reuse the previous update energy as a probe')
    group.add_argument('--phi-policy', type=str, default='current', choices=PHI_POLICIES,
                       help='first probe angle of Rotosolve')
    group.add_argument('--random-axis', action='store_true',
                       help='Rotosolve over a freshly drawn rotation axis per update')

    # Adam
    group.add_argument('--lr', type=float, default=0.05,
                       help='Adam learning rate')

    # SPSA gains
    group.add_argument('--spsa-a', type=float, default=0.15,
                       help='SPSA step size numerator')
    group.add_argument('--spsa-c', type=float, default=0.1,
                       help='SPSA perturbation numerator')
    group.add_argument('--spsa-alpha', type=float, default=0.602,
                       help='SPSA step size decay')
    group.add_argument('--spsa-gamma', type=float, default=0.101,
                       help='SPSA perturbation decay')
    group.add_argument('--spsa-stability', type=float, default=0.0,
                       help='SPSA stability constant A')
    return parser


def add_run_args(parser: argparse.ArgumentParser):
    """Run arguments."""

    group = parser.add_argument_group('run', 'estimation, stopping and output')
    group.add_argument('--shots', type=int, default=0,
                       help='shots per Hamiltonian term, 0 for exact energies')
    group.add_argument('--track-exact', action='store_true',
                       help='record the exact energy next to every sampled one')
    group.add_argument('--trials', type=int, default=10,
                       help='seeded trials per configuration')
    group.add_argument('--cycles', type=int, default=1000,
                       help='cycle budget')
    group.add_argument('--no-improve', type=float, nargs=2, default=None, metavar=('K2', 'DELTA'),
                       help='stop after K2 cycles that lower the best energy by less than DELTA')
    group.add_argument('--max-evals', type=int, default=None,
                       help='cap on energy evaluations; the shared per-trial budget of compare and scaling (default: 7 D cycles)')
    group.add_argument('--threshold', type=float, default=0.02,
                       help='normalized distance counted as solved')
    group.add_argument('--layer-list', type=int, nargs='+', default=None,
                       help='layer counts of the sweep and state preparation')
    group.add_argument('--qubit-list', type=int, nargs='+', default=None,
                       help='qubit counts of the scaling study')
    group.add_argument('--seed', type=int, default=0,
                       help='master seed for reproducibility')
    group.add_argument('--workers', type=int, default=1,
                       help='worker processes')
    group.add_argument('--out', type=str, default='runs',
                       help='output directory')
    group.add_argument('--quiet', action='store_true',
                       help='no progress bars, summary or info logs')
    group.add_argument('-v', '--verbose', action='count', default=0,
                       help='more log output, repeat for debug')
    return parser


def get_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='roto-center', description='Rotosolve / Rotoselect experiment runner')
    subparsers = parser.add_subparsers(dest='experiment', metavar='experiment')
    subparsers.required = True
    for name in EXPERIMENTS:
        sub = subparsers.add_parser(name, help=HELP[name])
        sub = add_problem_args(sub)
        sub = add_optimizer_args(sub)
        sub = add_run_args(sub)
        sub.set_defaults(**COMMAND_DEFAULTS[name])
    return parser


def args_to_config(args : argparse.Namespace) -> ExperimentConfig:
    """ The :py:class:`ExperimentConfig` described by parsed flags, validated. """
    return ExperimentConfig(
        experiment = args.experiment,
        task = args.task,
        hamiltonian = args.hamiltonian,
        J = args.J,
        h = args.h,
        ansatz = args.ansatz,
        num_qubits = args.qubits,
        layers = args.layers,
        optimizer = args.optimizer,
        lr = args.lr,
        spsa_a = args.spsa_a,
        spsa_c = args.spsa_c,
        spsa_alpha = args.spsa_alpha,
        spsa_gamma = args.spsa_gamma,
        spsa_stability = args.spsa_stability,
        shots = args.shots,
        trials = args.trials,
        cycles = args.cycles,
        no_improve = args.no_improve,
        max_evals = args.max_evals,
        threshold = args.threshold,
        reuse = args.reuse,
        phi_policy = args.phi_policy,
        random_axis = args.random_axis,
        track_exact = args.track_exact,
        layer_list = args.layer_list,
        qubit_list = args.qubit_list,
        out = args.out,
        seed = args.seed,
        workers = args.workers,
    ).validate()


def get_args(argv = None):
    return get_parser().parse_args(argv)
