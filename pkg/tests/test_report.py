"""Report serialization: schema conformance and round-tripping."""

import json

import jsonschema
from gmpy2 import mpq

from qgv.report import (
    REPORT_SCHEMA,
    Counterexample,
    InstanceResult,
    VerificationReport,
)
from qgv.verifier import SampleConfig, run_suite


def test_counterexample_serialization():
    cx = Counterexample(s=mpq(1, 2), x=mpq(-3, 5), lhs=mpq(2), rhs=mpq(7, 3))
    d = cx.to_dict()
    assert d == {"s": "1/2", "x": "-3/5", "lhs": "2/1", "rhs": "7/3"}
    assert Counterexample.from_dict(d) == cx


def test_counterexample_with_extras_and_nulls():
    cx = Counterexample(s=mpq(1, 3), x=None, lhs=mpq(0), rhs=mpq(1),
                        extras=(mpq(2), mpq(3, 4)))
    d = cx.to_dict()
    assert d["x"] is None
    assert d["extras"] == ["2/1", "3/4"]
    assert Counterexample.from_dict(d) == cx


def test_fail_iff_counterexample_invariant():
    rep = run_suite(SampleConfig(seed=0), n_max=2, ell_max=1, trials=4)
    for r in rep.results:
        if r.qid in ("PI_SERIES", "LIMIT_2F1") or ":" in r.qid:
            continue  # float checks carry no exact counterexample
        if r.status == "fail":
            assert r.counterexample is not None
            assert r.counterexample.lhs != r.counterexample.rhs
        else:
            assert r.counterexample is None


def test_report_schema_and_roundtrip():
    rep = run_suite(SampleConfig(seed=1), n_max=1, ell_max=1, trials=3)
    doc = rep.to_dict()
    jsonschema.validate(doc, REPORT_SCHEMA)
    again = VerificationReport.from_dict(json.loads(json.dumps(doc)))
    assert again.to_dict() == doc


def test_summary_counts():
    results = (
        InstanceResult("A", 0, None, None, "pass", 1),
        InstanceResult("B", 1, None, None, "fail", 1,
                       Counterexample(mpq(1, 2), mpq(1), mpq(0), mpq(1))),
        InstanceResult("C", 2, None, None, "skipped", 0),
    )
    rep = VerificationReport("0.1.0", 0, "sample", {}, results)
    assert rep.summary() == {"pass": 1, "fail": 1, "skipped": 1}
