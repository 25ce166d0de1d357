from __future__ import annotations

import json

import pytest

from oneplane import solver
from oneplane.verify import VerificationReport, corpus_check, verify


@pytest.mark.parametrize(
    "target, params",
    [
        ("prop1", {"instance": "thm2:2"}),
        ("prop2", {"k": 4}),
        ("prop3", {"k": 4, "trials": 3}),
        ("thm1", {"instance": "thm4:2"}),
        ("thm2", {"k": 2}),
        ("thm2", {"base": "cube"}),
        ("thm3", {"base": "prism3"}),
        ("thm4", {"k": 2}),
    ],
)
def test_targets_pass(target, params):
    report = verify(target, **params)
    assert report.overall, report.summary()
    assert report.parameters == params
    assert all(c.provenance in ("paper", "derived", "trivial") for c in report.checks)


def test_thm2_checklist():
    report = verify("thm2", k=2)
    observed = {c.name: c.observed for c in report.checks}
    assert observed["thm2(k=2): vertex connectivity"] == 3
    assert observed["thm2(k=2): crossing edges"] == 12
    assert report.info["thm2(k=2): exact minimum components"] == 2


def test_prop2_k4_is_k5():
    report = verify("prop2", k=4)
    assert report.overall
    assert report.info["gadget(4) size"]["vertices"] == 4


def test_corpus():
    report = corpus_check()
    assert report.overall, report.summary()
    names = {c.name for c in report.checks}
    assert "nonham38: hamiltonian_cycle" in names
    assert "petersen: rejected as a plane base" in names


def test_failed_check_fails_report():
    r = VerificationReport("thm2", {})
    r.add("good", 1, 1, "trivial")
    assert r.overall
    r.add("bad", 1, 2, "trivial")
    assert not r.overall
    assert r.to_dict()["overall"] == "fail"


def test_empty_report_does_not_pass():
    assert not VerificationReport("thm2", {}).overall


def test_budget_exhaustion_fails():
    report = verify("thm4", k=2, budget=solver.Budget(nodes=1))
    assert not report.overall


def test_unknown_target_and_parameter():
    with pytest.raises(ValueError):
        verify("thm9")
    with pytest.raises(ValueError):
        verify("prop2", base="cube")


def test_artifacts_and_json(tmp_path):
    report = verify("thm2", out_dir=tmp_path, k=2)
    assert report.artifacts
    for path in report.artifacts:
        assert (tmp_path / path.split("/")[-1]).exists()
    data = json.loads(report.to_json())
    assert data["overall"] == "pass"
    assert data["tool_version"]
    assert all("provenance" in c for c in data["checks"])


def test_reproducible():
    a = verify("thm4", k=2).to_dict()
    b = verify("thm4", k=2).to_dict()
    for d in (a, b):
        d.pop("wall_time")
        d["info"].pop("thm4(k=2): solver nodes", None)
    assert a == b
