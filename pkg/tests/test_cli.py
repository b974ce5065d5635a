import json

import pytest

from cellschur.cli import RunConfig, UsageError, main, run


def run_json(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def _ints_are_strings(obj):
    if isinstance(obj, bool) or obj is None:
        return True
    if isinstance(obj, int):
        return False
    if isinstance(obj, dict):
        return all(_ints_are_strings(v) for v in obj.values())
    if isinstance(obj, list):
        return all(_ints_are_strings(v) for v in obj)
    return True


def test_verify_monoid(capsys):
    code, rep = run_json(capsys, "verify", "--monoid", "full", "--r", "3")
    assert code == 0
    assert rep["verdicts"]["axioms"] == "pass"
    assert rep["basis_size"] == "27"
    assert set(rep) >= {"config", "basis_size", "layers", "verdicts", "timing_ms"}
    assert _ints_are_strings(rep)


def test_verify_schur(capsys):
    code, rep = run_json(capsys, "verify", "--schur", "full", "--r", "2", "--n", "2", "--side", "left")
    assert code == 0 and rep["verdicts"]["axioms"] == "pass"


def test_bound_guard(capsys):
    assert main(["verify", "--monoid", "full", "--r", "99"]) == 2
    assert "bound" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--schur", "full", "--r", "2"],  # missing side
        ["verify", "--monoid", "full", "--r", "2", "--side", "left"],
        ["verify", "--schur", "full", "--r", "3", "--n", "2", "--side", "left"],
        ["lambda0", "--monoid", "full", "--r", "2", "--char", "4"],
        ["witness", "--kind", "left-p", "--r", "3"],
        ["witness", "--kind", "left-top", "--r", "3", "--side", "right"],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--monoid", "weird", "--r", "2"])
    assert exc.value.code == 2


def test_lambda0_right_schur(capsys):
    code, rep = run_json(capsys, "lambda0", "--schur", "full", "--r", "3", "--side", "right", "--char", "2")
    assert code == 0 and rep["verdicts"]["theorem"] == "pass"
    assert ["2"] not in rep["lambda0"] and len(rep["lambda0"]) == 5


def test_lambda0_rook_schur(capsys):
    code, rep = run_json(capsys, "lambda0", "--schur", "rook", "--r", "2", "--side", "left", "--char", "0")
    assert code == 0 and rep["quasi_hereditary_sufficient"] is True
    assert [] in rep["lambda0"]


def test_lambda0_monoid(capsys):
    code, rep = run_json(capsys, "lambda0", "--monoid", "full", "--r", "2", "--p", "2")
    assert code == 0 and rep["lambda0"] == [["1"], ["1", "1"]]
    assert rep["dimensions"] == {"(1)": "1", "(1,1)": "1"}


def test_witness_commands(capsys):
    code, rep = run_json(capsys, "witness", "--kind", "char0-full", "--r", "3")
    assert code == 0 and len(rep["results"]) == 6
    code, rep = run_json(capsys, "witness", "--kind", "rook", "--r", "3", "--char", "3")
    assert code == 0 and {w["expected"] for w in rep["results"]} == {"1"}
    code, rep = run_json(capsys, "witness", "--kind", "right-p", "--r", "4", "--p", "2")
    assert code == 0
    hit = [w for w in rep["results"] if w["lambda"] == ["2"]]
    assert hit and hit[0]["computed"] == "1"


def test_csv_output(capsys):
    assert main(["lambda0", "--monoid", "full", "--r", "2", "--char", "2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "lambda,L_size,R_size,gram_rank,in_lambda0"
    assert lines[2] == "(2),1,1,0,False"


def test_output_file_and_env(tmp_path, monkeypatch, capsys):
    target = tmp_path / "rep.json"
    assert main(["witness", "--kind", "left-top", "--r", "2", "--output", str(target)]) == 0
    assert json.loads(target.read_text())["verdicts"]["witnesses"] == "pass"
    monkeypatch.setenv("CELLSCHUR_OUTPUT_DIR", str(tmp_path / "out"))
    assert main(["verify", "--monoid", "rook", "--r", "2"]) == 0
    assert [p.name for p in (tmp_path / "out").iterdir()] == ["verify-monoid-rook-r2-char0.json"]


def test_deterministic_across_jobs():
    reports = []
    for jobs in (1, 3):
        cfg = RunConfig("lambda0", mode="schur", kind="full", r=3, side="left", char=2, jobs=jobs)
        _, rep = run(cfg)
        rep.pop("timing_ms")
        reports.append(json.dumps(rep))
    assert reports[0] == reports[1]


def test_mismatch_exit_code(monkeypatch, capsys):
    import cellschur.cli as cli

    monkeypatch.setattr(cli, "predicted_monoid_lambda0", lambda spec, field: [])
    assert main(["lambda0", "--monoid", "full", "--r", "2", "--char", "2"]) == 1


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig("verify", r=2, jobs=0).validate()
    with pytest.raises(UsageError):
        RunConfig("verify", r=3, max_rank=2).validate()
