import json
import subprocess
import sys

import pytest

from expansive.cli.main import fixture_names, main, run_fixtures
from expansive.cli.problem import ProblemError, load_problem, parse_unit_value
from expansive.cli.report import validate_report


def run(tmp_path, capsys, text, *args, command="decide"):
    path = tmp_path / "p.toml"
    path.write_text(text)
    code = main([command, str(path), *args])
    out = capsys.readouterr()
    report = json.loads(out.out) if out.out.strip().startswith("{") else None
    return code, report, out.err


def test_decide_expansive(tmp_path, capsys):
    code, rep, _ = run(tmp_path, capsys, 'kind = "cyclic"\nannihilator = ["e(1) - 2"]\n')
    assert code == 0
    assert rep["verdict"] == "expansive"
    validate_report(rep)


def test_decide_non_expansive_witness(tmp_path, capsys):
    code, rep, _ = run(tmp_path, capsys, 'kind = "cyclic"\nannihilator = ["x1^2 + x1 + 1"]\n')
    assert code == 1
    assert rep["evidence"]["witness"]["assignments"]["x1"]


def test_verify_replays(tmp_path, capsys):
    code, rep, _ = run(tmp_path, capsys, 'kind = "cyclic"\nannihilator = ["x1 + x2 + 3"]\n', command="verify")
    assert code == 0 and rep["replayed"] is True


def test_expect_mismatch_reported(tmp_path, capsys):
    code, rep, _ = run(tmp_path, capsys,
                       'kind = "cyclic"\nexpect = "non_expansive"\nannihilator = ["x1 - 2"]\n')
    assert rep["matches_expected"] is False


@pytest.mark.parametrize("text, needle", [
    ('kind = "cyclic"\nannihilator = ["x1 +"]\n', "column"),
    ('kind = "cyclic"\nannihilator = ["x1"]\nannihilator = ["x2"]\n', "duplicate"),
    ('kind = "cyclic"\nannihilator = ["x1"]\ncolour = 1\n', "unknown key"),
    ('kind = "algebraic-unit"\nminpoly = "x^2 + 2"\n', "not a unit"),
    ('kind = "cyclic"\nannihilator = ["x1^99999999999 - 1"]\n', "overflow"),
    ('kind = "spaceship"\n', "kind"),
    ('kind = "witness-check"\ngenerators = ["x1 + 1"]\n[witness]\nx1 = "zeta(3, x)"\n', "witness"),
])
def test_data_errors_exit_65(tmp_path, capsys, text, needle):
    code, _, err = run(tmp_path, capsys, text)
    assert code == 65
    assert needle in err


def test_missing_file_exit_66(capsys):
    assert main(["decide", "/nonexistent/problem.toml"]) == 66


def test_usage_exit_64(capsys):
    assert main(["frobnicate"]) == 64
    assert main(["decide"]) == 64


def test_simulate_export(tmp_path, capsys):
    out = tmp_path / "seq.txt"
    code, rep, _ = run(tmp_path, capsys,
                       'kind = "simulate"\ngenerators = ["x1^2 + x1 + 1"]\nwindow = 30\n[witness]\nx1 = "zeta(3,1)"\n',
                       "--export", str(out), command="simulate")
    assert code == 1
    sim = rep["simulation"]
    assert sim["max_residual"] <= 1e-9
    assert out.read_text().startswith("# variables: x1")


def test_simulate_rejects_large_delta(tmp_path, capsys):
    code, _, err = run(tmp_path, capsys,
                       'kind = "simulate"\ngenerators = ["x1 + 1"]\ndelta = "1/2"\n[witness]\nx1 = -1\n',
                       command="simulate")
    assert code == 65 and "epsilon" in err


def test_enumerate_quartic(capsys):
    assert main(["enumerate-quartic", "--bound", "5"]) == 0
    rep = json.loads(capsys.readouterr().out)
    validate_report(rep)
    assert rep["matches_families"] is True


def test_all_fixtures_pass():
    results = run_fixtures()
    assert len(results) == len(fixture_names()) >= 20
    assert all(r["passed"] for r in results), [r for r in results if not r["passed"]]


def test_unit_values():
    assert parse_unit_value("i").order == 4
    assert parse_unit_value(-1).order == 2
    with pytest.raises(ValueError):
        parse_unit_value("2")


def test_problem_loader_requires_one_source():
    with pytest.raises(ProblemError):
        load_problem('kind = "cyclic"\n')
    with pytest.raises(ProblemError):
        load_problem('kind = "cyclic"\nannihilator = ["x1"]\nfamily = "e(n)"\n')


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "expansive", "enumerate-quartic", "--bound", "2"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["bound"] == 2
