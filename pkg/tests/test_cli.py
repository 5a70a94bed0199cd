import json
import subprocess
import sys

import pytest

from chainsched import (TaskSystem, read_schedule, read_system, write_schedule,
                        write_system)
from chainsched.algorithms import schedule as run_algo
from chainsched.cli import main

SPEC_DOC = json.dumps({
    "processors": 8, "splitable": False, "chain_class": "arbitrary",
    "num_chains": 3, "len_min": 1, "len_max": 4,
    "req_min": 1, "req_max": 8,
    "algorithms": ["lcf", "lcmcf"], "repetitions": 6, "seed_base": 50})

GENERATE_ARGS = ["generate", "--seed", "1", "--chains", "4",
                 "--processors", "8", "--class", "arbitrary",
                 "--len-min", "1", "--len-max", "4",
                 "--req-min", "1", "--req-max", "8"]


@pytest.fixture
def system_file(tmp_path):
    path = tmp_path / "system.json"
    path.write_text(write_system(
        TaskSystem(8, ((4, 4), (8,), (2, 2, 2)), False)))
    return path


class TestGenerate:
    def test_writes_valid_instance(self, tmp_path):
        out = tmp_path / "inst.json"
        assert main(GENERATE_ARGS + ["-o", str(out)]) == 0
        system = read_system(out.read_text())
        assert system.processors == 8 and len(system.chains) == 4

    def test_deterministic_bytes(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        main(GENERATE_ARGS + ["-o", str(a)])
        main(GENERATE_ARGS + ["-o", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_bad_config_reported(self, tmp_path, capsys):
        rc = main(GENERATE_ARGS[:-2] + ["--req-max", "99",
                                        "-o", str(tmp_path / "x.json")])
        assert rc == 1
        assert "error:" in capsys.readouterr().err


class TestValidateAndLb:
    def test_validate_ok(self, system_file, capsys):
        assert main(["validate", str(system_file)]) == 0
        assert capsys.readouterr().out.strip() == "ok"

    def test_validate_reports_violations(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"processors": 4, "splitable": False,
                                   "chains": [[9]]}))
        assert main(["validate", str(bad)]) == 1
        assert "exceeds" in capsys.readouterr().out

    def test_lb(self, system_file, capsys):
        assert main(["lb", str(system_file)]) == 0
        assert capsys.readouterr().out.strip() == "3"

    def test_missing_file(self, capsys):
        assert main(["lb", "/nonexistent.json"]) == 1
        assert "error:" in capsys.readouterr().err


class TestSchedule:
    def test_writes_schedule_and_metrics(self, system_file, tmp_path, capsys):
        out = tmp_path / "sched.json"
        rc = main(["schedule", "--system", str(system_file),
                   "--algo", "lcf", "-o", str(out), "--metrics"])
        assert rc == 0
        line = capsys.readouterr().out
        assert "makespan=" in line and "lower_bound=3" in line
        sched = read_schedule(out.read_text())
        system = read_system(system_file.read_text())
        assert sched == run_algo(system, "lcf")

    def test_mode_mismatch_reported(self, tmp_path, capsys):
        path = tmp_path / "split.json"
        path.write_text(write_system(TaskSystem(8, ((4, 4),), True)))
        rc = main(["schedule", "--system", str(path), "--algo", "lcf",
                   "-o", str(tmp_path / "s.json")])
        assert rc == 1
        assert "error:" in capsys.readouterr().err


class TestValidateSchedule:
    def test_ok_and_mismatch(self, system_file, tmp_path, capsys):
        system = read_system(system_file.read_text())
        good = tmp_path / "good.json"
        good.write_text(write_schedule(run_algo(system, "lcf")))
        assert main(["validate-schedule", "--system", str(system_file),
                     "--schedule", str(good)]) == 0
        assert capsys.readouterr().out.strip() == "ok"

        other = tmp_path / "other.json"
        other.write_text(write_schedule(
            run_algo(TaskSystem(8, ((4, 4),), False), "lcf")))
        assert main(["validate-schedule", "--system", str(system_file),
                     "--schedule", str(other)]) == 1
        assert capsys.readouterr().out


class TestOracle:
    def test_prints_optimum(self, system_file, capsys):
        # the full-width single-task chain forces a fourth slot past the LB
        assert main(["oracle", "--system", str(system_file)]) == 0
        assert capsys.readouterr().out.strip() == "4"

    def test_budget_exceeded(self, tmp_path, capsys):
        path = tmp_path / "big.json"
        path.write_text(write_system(
            TaskSystem(8, tuple((i % 5 + 2,) * 4 for i in range(6)), False)))
        assert main(["oracle", "--system", str(path), "--budget", "5"]) == 1
        assert "budget exceeded" in capsys.readouterr().err


class TestCompare:
    def test_csv_output(self, tmp_path):
        spec = tmp_path / "spec.json"
        spec.write_text(SPEC_DOC)
        out = tmp_path / "out.csv"
        assert main(["compare", "--spec", str(spec), "-o", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0].startswith("instance_seed,algorithm,")
        assert len(lines) == 13

    def test_byte_identical_runs(self, tmp_path):
        spec = tmp_path / "spec.json"
        spec.write_text(SPEC_DOC)
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["compare", "--spec", str(spec), "-o", str(a)])
        main(["compare", "--spec", str(spec), "-o", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_with_oracle_column(self, tmp_path):
        spec = tmp_path / "spec.json"
        spec.write_text(SPEC_DOC)
        out = tmp_path / "out.csv"
        assert main(["compare", "--spec", str(spec), "-o", str(out),
                     "--with-oracle"]) == 0
        assert out.read_text().splitlines()[0].endswith(",oracle_makespan")

    def test_plots_rendered(self, tmp_path, capsys):
        spec = tmp_path / "spec.json"
        spec.write_text(SPEC_DOC)
        out = tmp_path / "out.csv"
        figs = tmp_path / "figs"
        assert main(["compare", "--spec", str(spec), "-o", str(out),
                     "--plots", str(figs)]) == 0
        assert (figs / "ratio_summary.png").exists()
        assert (figs / "makespan_by_instance.png").exists()
        assert capsys.readouterr().out.count("wrote ") == 2

    def test_bad_spec_reported(self, tmp_path, capsys):
        spec = tmp_path / "spec.json"
        spec.write_text("{}")
        assert main(["compare", "--spec", str(spec),
                     "-o", str(tmp_path / "x.csv")]) == 1
        assert "error:" in capsys.readouterr().err


def test_console_entry_point(tmp_path, system_file):
    proc = subprocess.run(
        [sys.executable, "-m", "chainsched", "lb", str(system_file)],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "3"
