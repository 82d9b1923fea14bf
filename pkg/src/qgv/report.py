"""Result records and the stable JSON report format.

Rationals cross the report boundary as decimal-integer fraction strings
"p/q" with the denominator always explicit.  Reports round-trip through
``report_to_dict`` / ``report_from_dict``; the ``duration_seconds`` field
is the only value allowed to differ between reruns with equal seeds.
"""

from dataclasses import dataclass

from .numerics import format_rational, rational

VERSION = "0.1.0"


@dataclass(frozen=True)
class Counterexample:
    s: object = None  # ExactRational or None for classical points
    x: object = None
    lhs: object = None
    rhs: object = None
    extras: tuple = ()

    def to_dict(self):
        d = {
            "s": None if self.s is None else format_rational(self.s),
            "x": None if self.x is None else format_rational(self.x),
            "lhs": None if self.lhs is None else format_rational(self.lhs),
            "rhs": None if self.rhs is None else format_rational(self.rhs),
        }
        if self.extras:
            d["extras"] = [format_rational(e) for e in self.extras]
        return d

    @staticmethod
    def from_dict(d):
        if d is None:
            return None
        return Counterexample(
            s=None if d.get("s") is None else rational(d["s"]),
            x=None if d.get("x") is None else rational(d["x"]),
            lhs=None if d.get("lhs") is None else rational(d["lhs"]),
            rhs=None if d.get("rhs") is None else rational(d["rhs"]),
            extras=tuple(rational(e) for e in d.get("extras", [])),
        )


@dataclass(frozen=True)
class InstanceResult:
    """Outcome of checking one identity instance (or one derived check).

    status is "pass", "fail" (with a counterexample for exact kinds), or
    "skipped" when pole-free sampling was exhausted.
    """

    qid: str
    n: int = 0
    ell: int = None
    k: int = None
    status: str = "pass"
    trials: int = 0
    counterexample: Counterexample = None
    note: str = ""

    def to_dict(self):
        return {
            "id": self.qid,
            "n": self.n,
            "ell": self.ell,
            "k": self.k,
            "status": self.status,
            "trials": self.trials,
            "counterexample": (
                None if self.counterexample is None else self.counterexample.to_dict()
            ),
            "note": self.note,
        }

    @staticmethod
    def from_dict(d):
        return InstanceResult(
            qid=d["id"],
            n=d["n"],
            ell=d["ell"],
            k=d["k"],
            status=d["status"],
            trials=d["trials"],
            counterexample=Counterexample.from_dict(d.get("counterexample")),
            note=d.get("note", ""),
        )


@dataclass(frozen=True)
class VerificationReport:
    version: str
    seed: int
    mode: str
    config: dict
    results: tuple
    duration_seconds: float = 0.0

    def summary(self):
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for r in self.results:
            counts[r.status] += 1
        return counts

    def to_dict(self):
        return {
            "version": self.version,
            "seed": self.seed,
            "mode": self.mode,
            "config": dict(self.config),
            "results": [r.to_dict() for r in self.results],
            "summary": self.summary(),
            "duration_seconds": self.duration_seconds,
        }

    @staticmethod
    def from_dict(d):
        return VerificationReport(
            version=d["version"],
            seed=d["seed"],
            mode=d["mode"],
            config=dict(d.get("config", {})),
            results=tuple(InstanceResult.from_dict(r) for r in d["results"]),
            duration_seconds=d.get("duration_seconds", 0.0),
        )


# jsonschema-style schema of the report document (kept in sync with the
# serializers above; validated in the test suite).
REPORT_SCHEMA = {
    "type": "object",
    "required": ["version", "seed", "mode", "results", "summary"],
    "properties": {
        "version": {"type": "string"},
        "seed": {"type": "integer"},
        "mode": {"enum": ["sample", "certify"]},
        "config": {"type": "object"},
        "duration_seconds": {"type": "number"},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "n", "ell", "k", "status", "trials", "counterexample"],
                "properties": {
                    "id": {"type": "string"},
                    "n": {"type": "integer"},
                    "ell": {"type": ["integer", "null"]},
                    "k": {"type": ["integer", "null"]},
                    "status": {"enum": ["pass", "fail", "skipped"]},
                    "trials": {"type": "integer"},
                    "note": {"type": "string"},
                    "counterexample": {
                        "type": ["object", "null"],
                        "required": ["s", "x", "lhs", "rhs"],
                        "properties": {
                            "s": {"type": ["string", "null"]},
                            "x": {"type": ["string", "null"]},
                            "lhs": {"type": ["string", "null"]},
                            "rhs": {"type": ["string", "null"]},
                            "extras": {
                                "type": "array",
                                "items": {"type": "string"},
                            },
                        },
                    },
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["pass", "fail", "skipped"],
            "properties": {
                "pass": {"type": "integer"},
                "fail": {"type": "integer"},
                "skipped": {"type": "integer"},
            },
        },
    },
}
