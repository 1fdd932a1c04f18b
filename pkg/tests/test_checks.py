import json

from sikh.verify.checks import (VerificationReport, check_affinity, check_classical, check_d_squared,
                                check_detection, check_reidemeister)


def test_small_dsquare_run_passes():
    r = check_d_squared(trials=25, seed=1)
    assert r.ok and r.trials == 25


def test_dsquare_is_reproducible():
    a, b = check_d_squared(trials=10, seed=4), check_d_squared(trials=10, seed=4)
    assert a.details == b.details


def test_sign_corrupted_differential_is_caught():
    r = check_d_squared(trials=40, seed=7, rings=("z",), lambdas=(1,), sign_rule=lambda v, i: 1)
    assert not r.ok
    f = r.failures[0]
    assert "D^2" in f.message
    assert f.counterexample is not None
    # shrinking leaves a small witness: a square needs two crossings
    assert len(f.counterexample["crossings"]) == 2


def test_report_serialization():
    r = VerificationReport("x", trials=3)
    r.fail("case", "bad", {"a": 1})
    d = json.loads(r.dumps())
    assert d["ok"] is False and d["failures"][0]["counterexample"] == {"a": 1}
    assert r.summary().startswith("FAIL x: 3 trials, 1 failures")


def test_fixture_checks_pass():
    for check in (check_classical, check_detection, check_reidemeister):
        assert check().ok


def test_affinity_small():
    r = check_affinity(trials=20, seed=2, max_punctures=2)
    assert r.ok and r.trials == 20
