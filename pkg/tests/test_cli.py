"""Tests for the command-line entry point."""

import json

import pytest

from hermackey.cli import build_parser, main


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("SEED", "DIM_BOUND", "TRUNC", "COEFF", "CONFIG", "LOG_LEVEL"):
        monkeypatch.delenv(f"HERMACKEY_{name}", raising=False)


def test_parser_commands():
    args = build_parser().parse_args(["kh0", "--mackey", "A3", "--dim-bound", "3"])

    assert args.command == "kh0"
    assert args.dim_bound == 3
    with pytest.raises(SystemExit):
        build_parser().parse_args(["frobnicate"])


def test_witt0(capsys):
    code = main(["witt0", "--mackey", "A3", "--dim-bound", "4"])
    out = capsys.readouterr().out

    assert code == 0
    assert "== witt0 --mackey A3 --dim-bound 4 ==" in out
    assert "W0 = Z/4 (stable)" in out
    assert out.endswith("1 task(s), all PASS\n")


def test_involution_classes(capsys):
    assert main(["involution-classes", "--group", "S3"]) == 0
    out = capsys.readouterr().out

    assert "representative" in out
    assert "[PASS] components of the fixed nerve match involution classes" in out


def test_nerve_homology(capsys):
    code = main(["nerve-homology", "--nerve", "group", "--group", "C2", "--trunc", "4"])
    out = capsys.readouterr().out

    assert code == 0
    assert "H1 = Z/2" in out
    assert "H3 = Z/2" in out


def test_check_axioms_morphism(capsys):
    """Comma-separated morphisms compose left to right."""
    assert main(["check-axioms", "--morphism", "half3,d3"]) == 0
    assert "morphism" in capsys.readouterr().out


def test_run_input(tmp_path, capsys, problem_yaml):
    path = tmp_path / "problem.yaml"
    path.write_text(problem_yaml, encoding="utf-8")

    assert main(["run", "--input", str(path)]) == 0
    assert "3 task(s), all PASS" in capsys.readouterr().out


def test_task_error_exits_one(capsys):
    assert main(["kh0", "--mackey", "nothing"]) == 1
    assert "ERROR: UnknownReference" in capsys.readouterr().out


def test_bad_input_exits_two(tmp_path, capsys):
    path = tmp_path / "bad.yaml"
    path.write_text("tasks: [a, b\n", encoding="utf-8")

    assert main(["run", "--input", str(path)]) == 2
    assert "ERROR:" in capsys.readouterr().out


def test_bad_coefficients_exit_two(capsys):
    assert main(["nerve-homology", "--group", "C2", "--coeff", "zp:4"]) == 2
    assert "hermackey: error:" in capsys.readouterr().err


def test_emit_json(tmp_path, capsys):
    emit = tmp_path / "report.json"

    assert main(["witt0", "--mackey", "A3", "--emit", str(emit)]) == 0
    report = json.loads(emit.read_text(encoding="utf-8"))
    assert report["command"] == "witt0"
    assert report["tasks"][0]["values"] == [{"label": "W0", "value": "Z/4 (stable)"}]


def test_output_is_deterministic(capsys):
    argv = ["classify-forms", "--mackey", "A3", "--n", "1"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)

    assert capsys.readouterr().out == first


def test_timings(capsys):
    main(["witt0", "--mackey", "A3", "--timings"])

    assert "time:" in capsys.readouterr().out


def test_missing_flag_exits_two(capsys):
    assert main(["kh0"]) == 2
    err = capsys.readouterr().err
    assert "hermackey: error:" in err
    assert "kh0 needs --mackey" in err


def test_missing_flag_in_document_exits_two(tmp_path, capsys):
    path = tmp_path / "problem.yaml"
    path.write_text("tasks:\n  - command: lambda-check\n", encoding="utf-8")

    assert main(["run", "--input", str(path)]) == 2
    assert "lambda-check needs --group" in capsys.readouterr().out


def test_non_unital_monoid_from_catalog(capsys):
    assert main(["nerve-homology", "--monoid", "Null2", "--trunc", "2"]) == 0
    out = capsys.readouterr().out

    assert "simplices = 1, 2, 4" in out
    assert "H0 = Z" in out
