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

import csv
import glob
import json
import os

import pytest

from roto_center.cli import cli_main
from roto_center.arguments import get_args, args_to_config
from roto_center.errors import ConfigError


SMALL = ["--qubits", "2", "--layers", "1", "--trials", "1", "--cycles", "2", "--quiet"]


def _run_dir(out):
    dirs = glob.glob(os.path.join(str(out), "*", "*"))
    assert len(dirs) == 1
    return dirs[0]


class TestArguments:

    def test_subcommand_defaults(self):
        args = get_args(["stateprep"])
        assert args.qubits == 4
        assert args.ansatz == "circuit15"
        assert args.layer_list == [1, 2, 3, 4, 5, 6, 7]
        assert get_args(["scaling"]).shots == 1000
        assert get_args(["compare"]).layers == 30

    def test_flags_override_defaults(self):
        args = get_args(["compare", "--layers", "4", "--no-improve", "3", "1e-6"])
        cfg = args_to_config(args)
        assert cfg.layers == 4
        assert cfg.no_improve == [3.0, 1e-6]
        assert cfg.experiment == "compare"

    def test_inconsistent_flags(self):
        with pytest.raises(ConfigError):
            args_to_config(get_args(["vqe", "--optimizer", "rotosolve", "--reuse", "--random-axis"]))


class TestCli:

    def test_vqe_writes_outputs(self, tmp_path):
        assert cli_main(["vqe", "--out", str(tmp_path)] + SMALL) == 0
        path = _run_dir(tmp_path)
        assert os.path.basename(os.path.dirname(path)) == "vqe"
        with open(os.path.join(path, "trace.csv"), newline="", encoding="utf-8") as f:
            rows = list(csv.reader(f))
        assert rows[0][:4] == ["trial", "cycle", "gate_index", "cumulative_evals"]
        with open(os.path.join(path, "summary.json"), encoding="utf-8") as f:
            assert json.load(f)["config"]["num_qubits"] == 2

    def test_summary_printed(self, tmp_path, capsys):
        argv = ["vqe", "--out", str(tmp_path), "--qubits", "2", "--layers", "1", "--trials", "1", "--cycles", "1"]
        assert cli_main(argv) == 0
        out = capsys.readouterr().out
        assert "rotoselect" in out
        assert "results written to" in out

    def test_exact_mode(self, tmp_path):
        assert cli_main(["vqe", "--shots", "0", "--track-exact", "--out", str(tmp_path)] + SMALL) == 0
        with open(os.path.join(_run_dir(tmp_path), "trace.csv"), newline="", encoding="utf-8") as f:
            header = next(csv.reader(f))
        assert "exact_energy" not in header

    def test_unknown_optimizer(self, tmp_path, capsys):
        assert cli_main(["vqe", "--optimizer", "newton", "--out", str(tmp_path)]) == 2
        assert "invalid choice" in capsys.readouterr().err

    def test_missing_experiment(self):
        assert cli_main([]) == 2

    def test_bad_hamiltonian_file(self, tmp_path, capsys):
        ham = tmp_path / "bad.txt"
        ham.write_text("1.0 XX\n0.5 XQ\n")
        assert cli_main(["vqe", "--hamiltonian", str(ham), "--out", str(tmp_path)] + SMALL) == 1
        err = capsys.readouterr().err
        assert "line 2" in err
        assert not glob.glob(os.path.join(str(tmp_path), "vqe"))

    def test_missing_hamiltonian_file(self, tmp_path):
        assert cli_main(["vqe", "--hamiltonian", str(tmp_path / "absent.txt"), "--out", str(tmp_path)] + SMALL) == 1

    def test_bad_config(self, tmp_path, capsys):
        assert cli_main(["vqe", "--trials", "0", "--out", str(tmp_path), "--quiet"]) == 1
        assert "trials" in capsys.readouterr().err

    def test_sweep(self, tmp_path):
        argv = ["sweep-layers", "--layer-list", "1", "2", "--out", str(tmp_path)] + SMALL
        assert cli_main(argv) == 0
        with open(os.path.join(_run_dir(tmp_path), "summary.json"), encoding="utf-8") as f:
            groups = json.load(f)["groups"]
        assert len(groups) == 4
