"""Degree-bound algebra against a sympy expansion oracle.

For each checked instance the encoding is expanded symbolically into a
single fraction and its true numerator/denominator degrees in (s, x) are
compared against the bound the degree interpretation produces; bounds must
dominate.
"""

import pytest
import sympy as sp

from conftest import SymCtx
from qgv.contexts import QDegreeContext
from qgv.degrees import DegreeBound, ProductBound
from qgv.errors import ArityError
from qgv.identities import get_identity, instance_degree_bound

S, X = sp.symbols("s x")


def true_side_degrees(qid, side, n=None, ell=None, k=None):
    desc = get_identity(qid)
    fn = desc.lhs_ctx if side == "lhs" else desc.rhs_ctx
    expr = fn(SymCtx(), n, ell, k)
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    ds = max(sp.degree(num, S) if num != 0 else 0, sp.degree(den, S))
    dx = max(sp.degree(num, X) if num != 0 else 0, sp.degree(den, X))
    return int(ds), int(dx)


def side_bound(qid, side, n=None, ell=None, k=None):
    desc = get_identity(qid)
    fn = desc.lhs_ctx if side == "lhs" else desc.rhs_ctx
    val = fn(QDegreeContext(), n, ell, k)
    if isinstance(val, ProductBound):
        val = val.to_ratio()
    return val.bound()


CASES = [
    ("QGOSPER_1", dict(n=1)),
    ("QGOSPER_1", dict(n=2)),
    ("QGOSPER_2", dict(n=2)),
    ("THM1", dict(n=1, ell=1)),
    ("THM1", dict(n=2, ell=2)),
    ("THM5", dict(n=1, ell=2)),
    ("REL6", dict(ell=2, k=1)),
    ("REL5", dict(ell=1, k=2)),
    ("REL11", dict(ell=1, k=1)),
    ("COR2", dict(n=2)),
    ("COR6", dict(n=1)),
    ("COR6_EQUIV", dict(n=1)),
    ("COR12", dict(n=1)),
    ("COR16", dict(n=1)),
    ("PROP9_Q2", dict(n=1, ell=1)),
    ("PROP9_QH", dict(n=1, ell=1)),
    ("THM11", dict(n=1, ell=1)),
    ("THM15", dict(n=1, ell=1)),
]


@pytest.mark.parametrize("qid,args", CASES)
def test_bounds_dominate_true_degrees(qid, args):
    for side in ("lhs", "rhs"):
        bound = side_bound(qid, side, **args)
        ts, tx = true_side_degrees(qid, side, **args)
        assert ts <= bound.deg_s and tx <= bound.deg_x


def test_instance_bound_trivial_and_monotone():
    assert instance_degree_bound("QGOSPER_1", n=0) == DegreeBound(0, 0)
    prev = -1
    for n in range(4):
        b = instance_degree_bound("QGOSPER_1", n=n)
        assert b.deg_s > prev
        prev = b.deg_s


def test_instance_bound_rejects_non_q():
    with pytest.raises(ArityError):
        instance_degree_bound("GOSPER_1", n=1)
    with pytest.raises(ArityError):
        instance_degree_bound("PI_SERIES")


def test_residual_bound_dominates_mutated_difference():
    # the bound applies to LHS - RHS as a single fraction; check dominance
    # on a corrupted pair where the difference does not cancel
    from qgv.mutations import mutated_registry

    registry, qid = mutated_registry("QGOSPER_1_RHS_EXP_PLUS1")
    desc = next(d for d in registry if d.qid == qid)
    n = 2
    diff_sym = desc.lhs_ctx(SymCtx(), n, None, None) - desc.rhs_ctx(
        SymCtx(), n, None, None
    )
    num, den = sp.fraction(sp.cancel(sp.together(diff_sym)))
    assert num != 0
    ctx = QDegreeContext()
    diff = desc.lhs_ctx(ctx, n, None, None) + desc.rhs_ctx(ctx, n, None, None)
    if isinstance(diff, ProductBound):
        diff = diff.to_ratio()
    b = diff.bound()
    assert sp.degree(num, S) <= b.deg_s and sp.degree(den, S) <= b.deg_s
    assert sp.degree(num, X) <= b.deg_x and sp.degree(den, X) <= b.deg_x


def test_product_bound_algebra():
    f = ProductBound.linear(1, 2, 1)  # 1 - q x
    g = ProductBound.linear(1, -2, 2)  # 1 - x^2/q
    v = (f * f / g).to_ratio()
    b = v.bound()
    # f^2/g = (1 - s^2 x)^2 s^2 / (s^2 - x^2): numerator (s:6, x:2),
    # denominator (s:2, x:2)
    assert b == DegreeBound(6, 2)


def test_ratio_sum_uses_common_denominator():
    # n terms over the same denominator must not inflate the bound n-fold
    d = ProductBound.linear(1, 2, 0)
    terms = [(ProductBound.linear(1, 2 * j, 1) / d).to_ratio() for j in range(5)]
    total = terms[0]
    for t in terms[1:]:
        total = total + t
    b = total.bound()
    assert b.deg_s <= 8 + 2  # max numerator factor degree + shared denominator
