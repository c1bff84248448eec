"""
测试命令行：注册表列表、退出码、报告输出与重放
"""
import sys
import os

# 添加项目根目录到 Python 路径
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, project_root)
os.environ.setdefault("MAJORLAB_LOG_FILE", "0")

import io
import json

import pandas as pd
import pytest

from internal.cli import main
from pkg.constants import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION


def test_list_prints_registry(capsys):
    assert main(["--list"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    for check_id in ("araki", "main_normal_map", "det_schur_counterexample", "golden_thompson"):
        assert check_id in lines


def test_check_run_writes_report(tmp_path):
    out = tmp_path / "araki.json"
    code = main(["--check", "araki", "--dim", "2,3", "--trials", "5", "--seed", "7", "--out", str(out)])
    assert code == EXIT_OK
    report = json.loads(out.read_text(encoding="utf-8"))
    assert set(report) >= {"config", "artifact_version", "outcomes", "summary"}
    assert len(report["outcomes"]) == 10
    assert report["summary"]["failed"] == 0
    assert report["config"]["seed"] == 7


def test_counterexample_exit_codes(tmp_path):
    args = ["--check", "det_schur_counterexample", "--dim", "2", "--trials", "3"]
    out = tmp_path / "det.json"
    assert main(args + ["--out", str(out)]) == EXIT_VIOLATION
    report = json.loads(out.read_text(encoding="utf-8"))
    assert all(o["status"] == "expected-counterexample" for o in report["outcomes"])
    assert all("witness" in o for o in report["outcomes"])
    assert main(args + ["--ci", "--out", str(out)]) == EXIT_OK


@pytest.mark.parametrize("argv", [
    ["--bogus"],
    [],
    ["--check", "araki", "--dim", "0"],
    ["--check", "araki", "--trials", "-1"],
    ["--suite", "no-such-suite"],
    ["--check", "araki", "--suite", "all"],
])
def test_usage_errors_exit_one(argv):
    assert main(argv) == EXIT_USAGE


def test_unknown_check_exits_one(tmp_path):
    assert main(["--check", "no_such_check", "--out", str(tmp_path / "x.json")]) == EXIT_USAGE


def test_demo_prints_closed_forms(capsys):
    assert main(["--demo"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    demo = report["demo"]
    assert demo["golden_thompson_2x2"]["slack"] == pytest.approx(0.4058, abs=1e-4)
    assert demo["tightness_cartesian"]["p=2"] == pytest.approx(1.0, abs=1e-10)
    assert demo["det_schur_all_ones"]["det_rhs"] == pytest.approx(4.0)


def test_replay_is_byte_identical(tmp_path):
    out = tmp_path / "run.json"
    assert main(["--check", "striking,araki", "--dim", "2", "--trials", "3", "--seed", "11",
                 "--out", str(out)]) == EXIT_OK
    original = out.read_bytes()
    assert main(["--replay", str(out)]) == EXIT_OK
    assert out.read_bytes() == original


def test_replay_missing_file_exits_one(tmp_path):
    assert main(["--replay", str(tmp_path / "missing.json")]) == EXIT_USAGE


def test_csv_output(tmp_path):
    out = tmp_path / "araki.csv"
    assert main(["--check", "araki", "--dim", "2", "--trials", "4", "--format", "csv",
                 "--out", str(out)]) == EXIT_OK
    frame = pd.read_csv(io.StringIO(out.read_text(encoding="utf-8")))
    assert len(frame) == 4
    assert {"check_id", "seed", "status", "worst_margin"} <= set(frame.columns)
    assert set(frame["check_id"]) == {"araki"}


def test_probe_command(capsys):
    assert main(["--probe", "two_var", "--dim", "3", "--norm", "kyfan:2", "--alpha", "1.5"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["probe"]["verdict"] is True
    assert report["summary"]["pairs"] > 0


def test_limit_probe_only_reports(capsys):
    assert main(["--probe", "limit", "--dim", "2"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert len(report["limit"]["values"]) == len(report["limit"]["p_sequence"])


def test_search_command(tmp_path):
    out = tmp_path / "search.json"
    args = ["--objective", "det_schur", "--dim", "2", "--restarts", "2", "--steps", "5", "--out", str(out)]
    assert main(args) == EXIT_VIOLATION
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["search"]["verified"] is True
    assert report["summary"]["violation"] is True
    assert main(args + ["--ci"]) == EXIT_OK


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
