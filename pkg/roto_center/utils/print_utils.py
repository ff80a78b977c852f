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
import sys
import logging
from typing import Any, Dict, List, Optional

from tqdm import tqdm

_LEVELS = {0: logging.WARNING, 1: logging.INFO}


class _TqdmHandler(logging.StreamHandler):
    """ Routes log lines through ``tqdm.write`` so they do not tear progress bars. """

    def emit(self, record):
        try:
            tqdm.write(self.format(record), file=self.stream)
        except Exception:
            self.handleError(record)


def setup_logging(verbosity : int = 0, quiet : bool = False):
    """Configure the ``roto_center`` logger for command line use.

    Args:
        verbosity (int): 0 logs warnings, 1 adds info, 2 and more add debug output.
        quiet (bool): only log errors.
    """
    level = logging.ERROR if quiet else _LEVELS.get(verbosity, logging.DEBUG)
    logger = logging.getLogger("roto_center")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = _TqdmHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s", "%H:%M:%S"))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger


def _fmt(value : Optional[float]) -> str:
    if value is None:
        return "-"
    if isinstance(value, int):
        return str(value)
    return f"{value:.6g}"


def format_summary(groups : List[Dict[str, Any]]) -> str:
    """Render per-group statistics as a fixed-width table.

    Example:
        optimizer   qubits  layers  trials  best_mean  best_std  best_min  evals_mean  metric
        rotoselect       5       6      10   -8.04112  0.102334  -8.20711       21000  ...
    """
    header = ["optimizer", "qubits", "layers", "trials", "best_mean", "best_std", "best_min", "evals_mean", "metric"]
    rows = [header]
    for g in groups:
        best = g["best_exact_energy"] if g["best_exact_energy"]["count"] else g["best_energy"]
        metric = "-"
        for key in ("trace_distance", "evaluations_to_threshold", "normalized_distance"):
            if key in g:
                metric = f"{key}={_fmt(g[key]['mean'])}"
                if key == "evaluations_to_threshold":
                    metric += f" solved={g['solved']}/{g['trials']}"
                break
        rows.append([
            g["optimizer"], str(g["num_qubits"]), str(g["layers"]), str(g["trials"]),
            _fmt(best["mean"]), _fmt(best["std"]), _fmt(best["min"]), _fmt(g["evaluations"]["mean"]), metric,
        ])
    widths = [max(len(r[i]) for r in rows) for i in range(len(header) - 1)]
    lines = []
    for r in rows:
        cells = [r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:-1], widths[1:])] + [r[-1]]
        lines.append("  ".join(cells))
    return "\n".join(lines)


def print_summary(record, file = None):
    """Print the summary table of a finished run.

    Args:
        record: a :py:class:`roto_center.harness.RunRecord`.
        file: stream to print to. Defaults to ``sys.stdout``.
    """
    print(f"{record.experiment}: {len(record.trials)} trials in {_fmt(record.duration)} s", file=file)
    for n, bounds in sorted(record.spectrum.items()):
        print(f"  spectrum n={n}: [{_fmt(bounds['e_min'])}, {_fmt(bounds['e_max'])}]", file=file)
    print(format_summary(record.group_summaries()), file=file)
