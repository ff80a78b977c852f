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

import os
import csv
import json
import logging
import datetime
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

logger = logging.getLogger(__name__)

TRACE_COLUMNS = ("trial", "cycle", "gate_index", "cumulative_evals", "energy", "exact_energy", "generator")


@dataclass
class TrialResult:
    """ Outcome of one seeded optimizer run, small enough to ship back from a worker process. """

    trial : int
    optimizer : str
    num_qubits : int
    layers : int
    seeds : Dict[str, int]
    summary : Dict[str, Any]
    rows : List[Tuple]
    metrics : Dict[str, Any] = field(default_factory=dict)

    @property
    def group(self) -> Tuple[str, int, int]:
        return (self.optimizer, self.num_qubits, self.layers)

    def to_dict(self) -> Dict[str, Any]:
        out = {
            "optimizer": self.optimizer,
            "num_qubits": self.num_qubits,
            "layers": self.layers,
            "seeds": self.seeds,
        }
        out.update(self.summary)
        out.update(self.metrics)
        return out


def _stats(values : List[float]) -> Dict[str, Optional[float]]:
    values = [v for v in values if v is not None]
    if not values:
        return {"mean": None, "std": None, "min": None, "median": None, "count": 0}
    arr = np.asarray(values, dtype=np.float64)
    return {
        "mean": float(arr.mean()),
        "std": float(arr.std()),
        "min": float(arr.min()),
        "median": float(np.median(arr)),
        "count": int(arr.size),
    }


class RunRecord:
    """ All trials of one experiment, with the configuration that produced them.

    Args:
        experiment (str): experiment name.
        config (dict): the experiment configuration, echoed into ``summary.json``.
    """

    def __init__(self, experiment : str, config : Dict[str, Any]):
        self.experiment = experiment
        self.config = config
        self.trials : List[TrialResult] = []
        self.spectrum : Dict[int, Dict[str, float]] = {}
        self.started_at = datetime.datetime.now()
        self.duration : Optional[float] = None

    def add(self, result : TrialResult):
        self.trials.append(result)

    def close(self):
        self.duration = (datetime.datetime.now() - self.started_at).total_seconds()

    @property
    def exact_column(self) -> bool:
        return bool(self.config.get("shots", 0)) and bool(self.config.get("track_exact", False))

    def groups(self) -> Dict[Tuple[str, int, int], List[TrialResult]]:
        out : Dict[Tuple[str, int, int], List[TrialResult]] = {}
        for t in self.trials:
            out.setdefault(t.group, []).append(t)
        return out

    def group_summaries(self) -> List[Dict[str, Any]]:
        """ Mean / std / min / median of the per-trial metrics, per (optimizer, qubits, layers). """
        out = []
        for (optimizer, num_qubits, layers), trials in self.groups().items():
            entry = {"optimizer": optimizer, "num_qubits": num_qubits, "layers": layers, "trials": len(trials)}
            entry["best_energy"] = _stats([t.summary["best_energy"] for t in trials])
            entry["best_exact_energy"] = _stats([t.summary["best_exact_energy"] for t in trials])
            entry["evaluations"] = _stats([t.summary["evaluations"] for t in trials])
            for key in ("evaluations_to_threshold", "trace_distance", "normalized_distance"):
                if any(key in t.metrics for t in trials):
                    entry[key] = _stats([t.metrics.get(key) for t in trials])
            if any("evaluations_to_threshold" in t.metrics for t in trials):
                entry["solved"] = sum(1 for t in trials if t.metrics.get("evaluations_to_threshold") is not None)
            out.append(entry)
        return out

    def summary(self) -> Dict[str, Any]:
        return {
            "experiment": self.experiment,
            "config": self.config,
            "started_at": self.started_at.isoformat(timespec="seconds"),
            "duration_seconds": self.duration,
            "spectrum": {str(n): bounds for n, bounds in sorted(self.spectrum.items())},
            "trials": {str(t.trial): t.to_dict() for t in self.trials},
            "groups": self.group_summaries(),
        }


class RecordWriter:
    """ Writes ``<out>/<experiment>/<timestamp>_<seed>/trace.csv`` and ``summary.json``.

    The CSV holds nothing time-dependent, so identical runs give identical files; the
    timestamp lives in the directory name and the JSON only.
    """

    def __init__(self, out : str):
        self.out = out

    def run_dir(self, record : RunRecord) -> str:
        stamp = record.started_at.strftime("%Y%m%d-%H%M%S")
        seed = record.config.get("seed", 0)
        path = os.path.join(self.out, record.experiment, f"{stamp}_{seed}")
        suffix = 1
        candidate = path
        while os.path.exists(candidate):
            candidate = f"{path}.{suffix}"
            suffix += 1
        return candidate

    def write(self, record : RunRecord) -> str:
        path = self.run_dir(record)
        os.makedirs(path)
        self.write_trace(record, os.path.join(path, "trace.csv"))
        with open(os.path.join(path, "summary.json"), "w", encoding="utf-8") as writer:
            json.dump(record.summary(), writer, indent=2, sort_keys=True)
            writer.write("\n")
        logger.info("wrote %d trials to %s", len(record.trials), path)
        return path

    def write_trace(self, record : RunRecord, file_path : str):
        columns = [c for c in TRACE_COLUMNS if c != "exact_energy" or record.exact_column]
        with open(file_path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(columns)
            for trial in record.trials:
                for row in trial.rows:
                    values = dict(zip(TRACE_COLUMNS, (trial.trial,) + tuple(row)))
                    writer.writerow([_cell(values[c]) for c in columns])


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)
