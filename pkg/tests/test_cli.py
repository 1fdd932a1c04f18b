import json

import pytest

from sikh.cli import main
from sikh.verify.fixtures import fixture_path


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_hopf(capsys):
    code, out, _ = run(capsys, "compute", str(fixture_path("hopf")), "--ring", "q", "--lambda", "0")
    assert code == 0 and "total rank 4" in out


def test_compute_annular_unknot(capsys):
    code, out, _ = run(capsys, "compute", str(fixture_path("annular_unknot")), "--grading", "g")
    assert code == 0
    assert out.splitlines()[-4:] == ["   g  rank", "(-1)     1", " (1)     1", "total rank 2"]
    code, out, _ = run(capsys, "compute", str(fixture_path("annular_unknot")), "--format", "json", "--jobs", "1")
    doc = json.loads(out)
    assert [(g["g"], g["rank"]) for g in doc["groups"]] == [([-1], 1), ([1], 1)]


def test_json_output_is_byte_stable(capsys):
    args = ("compute", str(fixture_path("parallel_clasp")), "--ring", "z", "--format", "json")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_bad_file(tmp_path, capsys):
    bad = tmp_path / "bad.skd"
    bad.write_text('{"punctures": 0,\n "edges": [')
    code, _, err = run(capsys, "compute", str(bad))
    assert code == 1 and "line 2" in err


def test_missing_file(tmp_path, capsys):
    assert run(capsys, "compute", str(tmp_path / "none.skd"))[0] == 1


def test_bad_lambda_and_ring(capsys):
    path = str(fixture_path("hopf"))
    assert run(capsys, "compute", path, "--lambda", "2")[0] == 1
    assert run(capsys, "compute", path, "--ring", "r")[0] == 1


def test_euler(capsys):
    code, out, _ = run(capsys, "euler", str(fixture_path("annular_unknot")))
    assert code == 0 and out.split() == ["g", "chi", "(-1)", "1", "(1)", "1"]
    assert run(capsys, "euler", str(fixture_path("hopf")), "--by", "x")[0] == 1


def test_verify_detect(capsys):
    code, out, _ = run(capsys, "verify", "detect")
    assert code == 0 and out.startswith("PASS detect")
    assert "trefoil" in out


def test_verify_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("SIKH_SEED", "3")
    code, out, _ = run(capsys, "verify", "dsquare", "--trials", "5", "--format", "json")
    assert code == 0 and json.loads(out)["ok"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    from sikh.verify import checks

    bad = checks.VerificationReport("detect", trials=1)
    bad.fail("x", "forced")
    monkeypatch.setitem(checks.CHECKS, "detect", lambda: bad)
    code, out, _ = run(capsys, "verify", "detect")
    assert code == 3 and "failure x: forced" in out


def test_internal_error_exit_code(capsys, monkeypatch):
    from sikh import cli
    from sikh.errors import InvariantError

    def boom(*a, **k):
        raise InvariantError("broken")

    monkeypatch.setattr(cli, "sikh", boom)
    assert run(capsys, "compute", str(fixture_path("hopf")))[0] == 2


def test_usage_error(capsys):
    with pytest.raises(SystemExit):
        main(["frobnicate"])
