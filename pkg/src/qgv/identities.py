"""Identity registry: one descriptor per catalog formula.

Catalog ids are the stable public names used by the CLI and the report
format.  Each descriptor carries exact LHS/RHS evaluators, a pole
predicate (a point is a pole when either side hits a vanishing
denominator), and, for q-kind entries, a degree-bound rule for grid
certification.  Corollaries are independent descriptors, never derived
views of their parent entries, so transcription errors in the printed
corollary text surface as value mismatches instead of being masked by
shared code.
"""

from dataclasses import dataclass, replace

from gmpy2 import mpq

from . import encodings as enc
from .contexts import QDegreeContext, QExactContext
from .degrees import ProductBound
from .errors import ArityError, PoleError, UnknownIdentity
from .factorials import QBase, QFactorArg
from .numerics import QPoint, rational
from .series import QHyperSpec, eval_qhyper


@dataclass(frozen=True)
class EvalPoint:
    """Evaluation point: s for q-kind entries, x where the formula uses it,
    extras for the free parameters of PHI65 (r, b, c with a = r^2)."""

    s: object = None
    x: object = None
    extras: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, "s", None if self.s is None else rational(self.s)
        )
        object.__setattr__(
            self, "x", None if self.x is None else rational(self.x)
        )
        object.__setattr__(
            self, "extras", tuple(rational(e) for e in self.extras)
        )


@dataclass(frozen=True)
class IdentityDescriptor:
    qid: str
    kind: str  # "classical" | "q" | "float"
    summary: str
    takes_n: bool = False
    takes_ell: bool = False
    takes_k: bool = False
    n_extras: int = 0
    uses_x: bool = True
    lhs_ctx: object = None  # (ctx, n, ell, k) -> value, q-kind only
    rhs_ctx: object = None
    lhs_classical: object = None  # (n, ell, x) -> ExactRational
    rhs_classical: object = None
    lhs_exact_override: object = None  # (n, ell, k, point) -> ExactRational

    def arity_string(self):
        parts = []
        if self.takes_n:
            parts.append("n")
        if self.takes_ell:
            parts.append("ell")
        if self.takes_k:
            parts.append("k")
        if self.n_extras:
            parts.append(f"{self.n_extras} extras")
        return ", ".join(parts) if parts else "none"


def _check_arity(desc, n, ell, k, point):
    if desc.kind == "float":
        raise ArityError(
            f"{desc.qid} is float-only; use the limits/pi checks instead of "
            "exact evaluation"
        )
    for name, takes, value in (
        ("n", desc.takes_n, n),
        ("ell", desc.takes_ell, ell),
        ("k", desc.takes_k, k),
    ):
        if takes and value is None:
            raise ArityError(f"{desc.qid} requires parameter {name}")
        if not takes and value is not None:
            raise ArityError(f"{desc.qid} does not take parameter {name}")
        if value is not None and (not isinstance(value, int) or value < 0):
            raise ArityError(f"parameter {name} must be a nonnegative integer")
    if desc.kind == "q":
        if point.s is None:
            raise ArityError(f"{desc.qid} needs a q-point (s missing)")
        if desc.uses_x and point.x is None:
            raise ArityError(f"{desc.qid} needs a nonzero x")
    else:
        if point.s is not None:
            raise ArityError(
                f"{desc.qid} is classical; its point carries only x"
            )
        if point.x is None:
            raise ArityError(f"{desc.qid} needs an x value")
    if len(point.extras) != desc.n_extras:
        raise ArityError(
            f"{desc.qid} takes {desc.n_extras} extra parameters, "
            f"got {len(point.extras)}"
        )


def _phi65_lhs_exact(n, ell, k, point):
    # The printed 6phi5 summation, routed through the generic terminating
    # phi evaluator; the context encoding of the same sum backs the degree
    # rule and is cross-checked against this route in the tests.
    r, b, c = point.extras
    a = r * r
    spec = QHyperSpec(
        upper=(
            QFactorArg(a),
            QFactorArg(r, 2),
            QFactorArg(-r, 2),
            QFactorArg(b),
            QFactorArg(c),
            QFactorArg(1, -2 * ell),
        ),
        lower=(
            QFactorArg(r),
            QFactorArg(-r),
            QFactorArg(a / b, 2),
            QFactorArg(a / c, 2),
            QFactorArg(a, 2 + 2 * ell),
        ),
        z=QFactorArg(a / (b * c), 2 + 2 * ell),
        base=QBase(2),
        termination_index=5,
    )
    return eval_qhyper(spec, QPoint(point.s, 1))


_CATALOG = []


def _add(desc):
    _CATALOG.append(desc)


def _q(qid, summary, lhs, rhs, *, n=False, ell=False, k=False, extras=0, x=True):
    _add(
        IdentityDescriptor(
            qid,
            "q",
            summary,
            takes_n=n,
            takes_ell=ell,
            takes_k=k,
            n_extras=extras,
            uses_x=x,
            lhs_ctx=lhs,
            rhs_ctx=rhs,
        )
    )


def _classical(qid, summary, lhs, rhs, *, n=False, ell=False):
    _add(
        IdentityDescriptor(
            qid,
            "classical",
            summary,
            takes_n=n,
            takes_ell=ell,
            lhs_classical=lhs,
            rhs_classical=rhs,
        )
    )


_classical(
    "GOSPER_1",
    "classical 3F2(3/4) summation, lower parameters 1/2 and -3n",
    enc.gosper1_lhs,
    enc.gosper1_rhs,
    n=True,
)
_classical(
    "GOSPER_2",
    "classical 3F2(3/4) summation, lower parameters 3/2 and -1-3n",
    enc.gosper2_lhs,
    enc.gosper2_rhs,
    n=True,
)
_q(
    "QGOSPER_1",
    "q-analogue of GOSPER_1 (cubic-base sum, base-q^3 product side)",
    enc.qgosper1_lhs,
    enc.qgosper1_rhs,
    n=True,
)
_q(
    "QGOSPER_2",
    "q-analogue of GOSPER_2 (cubic-base sum, base-q^3 product side)",
    enc.qgosper2_lhs,
    enc.qgosper2_rhs,
    n=True,
)
_q(
    "PHI65",
    "terminating very-well-poised 6phi5 summation; free parameters r, b, c "
    "with a = r^2",
    enc.phi65_lhs,
    enc.phi65_rhs,
    ell=True,
    extras=3,
    x=False,
)
_q(
    "REL6",
    "bracket-sum relation with constant value 1 (engine of THM1/THM15)",
    enc.rel6_lhs,
    enc.const_one,
    ell=True,
    k=True,
)
_q(
    "THM1",
    "extension of QGOSPER_1 with extra integer parameter ell",
    enc.thm1_lhs,
    enc.thm1_rhs,
    n=True,
    ell=True,
)
_q(
    "COR2",
    "ell = 1 case of THM1",
    enc.cor2_lhs,
    enc.cor2_rhs,
    n=True,
)
_classical(
    "PROP3",
    "extension of GOSPER_1 with extra integer parameter ell (q -> 1 limit "
    "of THM1)",
    enc.prop3_lhs,
    enc.prop3_rhs,
    n=True,
    ell=True,
)
_classical(
    "COR4",
    "ell = 1 case of PROP3",
    enc.cor4_lhs,
    enc.cor4_rhs,
    n=True,
)
_q(
    "REL5",
    "bracket-sum relation with constant value 1 (engine of THM5)",
    enc.rel5_lhs,
    enc.const_one,
    ell=True,
    k=True,
)
_q(
    "THM5",
    "extension of QGOSPER_2 with extra integer parameter ell",
    enc.thm5_lhs,
    enc.thm5_rhs,
    n=True,
    ell=True,
)
_q(
    "COR6",
    "ell = 1 case of THM5",
    enc.cor6_lhs,
    enc.cor6_rhs,
    n=True,
)
_q(
    "COR6_EQUIV",
    "equivalent form of COR6 (half-power signs flipped, shifted "
    "denominator parameter)",
    enc.cor6_equiv_lhs,
    enc.cor6_equiv_rhs,
    n=True,
)
_classical(
    "PROP7",
    "extension of GOSPER_2 with extra integer parameter ell (q -> 1 limit "
    "of THM5)",
    enc.prop7_lhs,
    enc.prop7_rhs,
    n=True,
    ell=True,
)
_classical(
    "COR8",
    "ell = 1 case of PROP7",
    enc.cor8_lhs,
    enc.cor8_rhs,
    n=True,
)
_q(
    "PROP9_Q2",
    "THM5 lifted to base q^2 (intermediate step toward PROP9)",
    enc.prop9_q2_lhs,
    enc.prop9_q2_rhs,
    n=True,
    ell=True,
)
_q(
    "PROP9_QH",
    "half-power image of PROP9_Q2 (intermediate step toward PROP9)",
    enc.prop9_qh_lhs,
    enc.prop9_qh_rhs,
    n=True,
    ell=True,
)
_classical(
    "PROP9",
    "3F2(3/4) extension with shifted lower parameter 3/2 - ell (q -> 1 "
    "limit of PROP9_QH)",
    enc.prop9_lhs,
    enc.prop9_rhs,
    n=True,
    ell=True,
)
_classical(
    "COR10",
    "ell = 1 case of PROP9",
    enc.cor10_lhs,
    enc.cor10_rhs,
    n=True,
)
_q(
    "REL11",
    "bracket-sum relation with constant value 1 (engine of THM11)",
    enc.rel11_lhs,
    enc.const_one,
    ell=True,
    k=True,
)
_q(
    "THM11",
    "extension of COR2 with extra integer parameter ell",
    enc.thm11_lhs,
    enc.thm11_rhs,
    n=True,
    ell=True,
)
_q(
    "COR12",
    "ell = 1 case of THM11",
    enc.cor12_lhs,
    enc.cor12_rhs,
    n=True,
)
_classical(
    "PROP13",
    "q -> 1 limit of THM11; printed with prefactor 1/2 and no (-1)^i",
    enc.prop13_lhs,
    enc.prop13_rhs,
    n=True,
    ell=True,
)
_classical(
    "COR14",
    "ell = 1 case of PROP13",
    enc.cor14_lhs,
    enc.cor14_rhs,
    n=True,
)
_q(
    "THM15",
    "extension of COR6_EQUIV with extra integer parameter ell",
    enc.thm15_lhs,
    enc.thm15_rhs,
    n=True,
    ell=True,
)
_q(
    "COR16",
    "ell = 1 case of THM15",
    enc.cor16_lhs,
    enc.cor16_rhs,
    n=True,
)
_classical(
    "PROP17",
    "q -> 1 limit of THM15",
    enc.prop17_lhs,
    enc.prop17_rhs,
    n=True,
    ell=True,
)
_classical(
    "COR18",
    "printed header says ell = 1 in PROP13; parameters match PROP17 at "
    "ell = 1 (adjudicated by the suite)",
    enc.cor18_lhs,
    enc.cor18_rhs,
    n=True,
)
_add(
    IdentityDescriptor(
        "LIMIT_2F1",
        "float",
        "n -> infinity case of GOSPER_2: 2F1(1/4) value as a Gamma ratio",
    )
)
_add(
    IdentityDescriptor(
        "PI_SERIES",
        "float",
        "sum k!/((3/2)_k 4^k) = 2*pi/(3*sqrt(3))",
    )
)

# PHI65's exact LHS goes through the generic phi evaluator.
for _i, _d in enumerate(_CATALOG):
    if _d.qid == "PHI65":
        _CATALOG[_i] = replace(_d, lhs_exact_override=_phi65_lhs_exact)

_BY_ID = {d.qid: d for d in _CATALOG}


def list_identities():
    """All catalog descriptors, each exactly once, in catalog order."""
    return list(_CATALOG)


def get_identity(qid):
    try:
        return _BY_ID[qid]
    except KeyError:
        raise UnknownIdentity(f"unknown identity id: {qid}") from None


def eval_side(qid, side, n=None, ell=None, k=None, point=None):
    """Exact value of one side of an identity instance.

    Raises ArityError on parameter/kind mismatches and PoleError when a
    denominator factor vanishes at the point.
    """
    desc = get_identity(qid)
    if side not in ("lhs", "rhs"):
        raise ArityError(f"side must be 'lhs' or 'rhs', got {side!r}")
    if point is None:
        raise ArityError("an evaluation point is required")
    _check_arity(desc, n, ell, k, point)
    try:
        if desc.kind == "classical":
            fn = desc.lhs_classical if side == "lhs" else desc.rhs_classical
            return fn(n, ell, point.x)
        if side == "lhs" and desc.lhs_exact_override is not None:
            return desc.lhs_exact_override(n, ell, k, point)
        ctx = QExactContext(point.s, point.x, point.extras)
        fn = desc.lhs_ctx if side == "lhs" else desc.rhs_ctx
        return fn(ctx, n, ell, k)
    except ZeroDivisionError as exc:
        raise PoleError(f"zero denominator while evaluating {qid} {side}") from exc


def residual(qid, n=None, ell=None, k=None, point=None):
    """eval_side(lhs) - eval_side(rhs); exactly 0 when the instance holds."""
    return eval_side(qid, "lhs", n, ell, k, point) - eval_side(
        qid, "rhs", n, ell, k, point
    )


def pole_predicate(qid, n=None, ell=None, k=None, point=None):
    """True when either side hits a vanishing denominator at the point."""
    try:
        eval_side(qid, "lhs", n, ell, k, point)
        eval_side(qid, "rhs", n, ell, k, point)
        return False
    except PoleError:
        return True


_PHI65_DEFAULT_EXTRAS = (mpq(2), mpq(3), mpq(5))


def instance_degree_bound(qid, n=None, ell=None, k=None, extras=None):
    """Degree bound of LHS - RHS in (s, x) for one instance of a q identity.

    The bound comes from running the identity's own encoding through the
    degree interpretation: linear factors contribute their exponent sizes,
    denominators are tracked as exact factor multisets so sums share their
    common denominator instead of multiplying it.
    """
    desc = get_identity(qid)
    if desc.kind != "q":
        raise ArityError(f"{qid} is {desc.kind}; degree bounds apply to q-kind")
    for name, takes, value in (
        ("n", desc.takes_n, n),
        ("ell", desc.takes_ell, ell),
        ("k", desc.takes_k, k),
    ):
        if takes and value is None:
            raise ArityError(f"{qid} requires parameter {name}")
    if desc.n_extras and extras is None:
        extras = _PHI65_DEFAULT_EXTRAS
    ctx = QDegreeContext(extras or ())
    diff = desc.lhs_ctx(ctx, n, ell, k) + desc.rhs_ctx(ctx, n, ell, k)
    if isinstance(diff, ProductBound):
        diff = diff.to_ratio()
    return diff.bound()
