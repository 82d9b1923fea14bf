"""Registry discipline, collapse/corollary cross-checks, and the printed
base-change steps, all as exact value equalities."""

import random

import pytest
from gmpy2 import mpq

from conftest import SubstCtx
from qgv.contexts import QExactContext
from qgv.errors import ArityError, PoleError, UnknownIdentity
from qgv.identities import (
    EvalPoint,
    eval_side,
    get_identity,
    list_identities,
    pole_predicate,
    residual,
)

P = EvalPoint(s=mpq(1, 2), x=mpq(3, 5))
PX = EvalPoint(x=mpq(3, 5))

CATALOG_IDS = [
    "GOSPER_1", "GOSPER_2", "QGOSPER_1", "QGOSPER_2", "PHI65", "REL6",
    "THM1", "COR2", "PROP3", "COR4", "REL5", "THM5", "COR6", "COR6_EQUIV",
    "PROP7", "COR8", "PROP9_Q2", "PROP9_QH", "PROP9", "COR10", "REL11",
    "THM11", "COR12", "PROP13", "COR14", "THM15", "COR16", "PROP17",
    "COR18", "LIMIT_2F1", "PI_SERIES",
]


def test_catalog_order_and_count():
    ids = [d.qid for d in list_identities()]
    assert ids == CATALOG_IDS
    assert len(ids) == len(set(ids)) == 31
    assert "GOSPER_1" in ids and "THM1" in ids


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        get_identity("NOPE")


def test_kind_discipline():
    # every q-kind entry rejects a classical-only point, and vice versa
    for d in list_identities():
        if d.kind != "q":
            continue
        n = 1 if d.takes_n else None
        ell = 1 if d.takes_ell else None
        k = 1 if d.takes_k else None
        with pytest.raises(ArityError):
            eval_side(d.qid, "lhs", n, ell, k, PX)
    with pytest.raises(ArityError):
        eval_side("GOSPER_1", "lhs", 1, None, None, P)


def test_arity_errors():
    with pytest.raises(ArityError):
        eval_side("QGOSPER_1", "lhs", n=1, ell=2, point=P)  # no ell slot
    with pytest.raises(ArityError):
        eval_side("THM1", "lhs", n=1, point=P)  # missing ell
    with pytest.raises(ArityError):
        eval_side("REL6", "lhs", ell=1, point=P)  # missing k
    with pytest.raises(ArityError):
        eval_side("LIMIT_2F1", "lhs", point=PX)  # float-only
    with pytest.raises(ArityError):
        eval_side("THM1", "lhs", n=1, ell=-1, point=P)
    with pytest.raises(ArityError):
        eval_side("THM1", "both", n=1, ell=0, point=P)


def test_eval_side_examples():
    assert eval_side("QGOSPER_1", "lhs", n=0, point=P) == 1
    assert eval_side("GOSPER_1", "rhs", n=1, point=EvalPoint(x=mpq(1, 3))) == 1
    assert eval_side("REL6", "rhs", ell=2, k=3, point=P) == 1
    assert eval_side("REL5", "rhs", ell=1, k=1, point=P) == 1
    assert eval_side("REL11", "rhs", ell=4, k=2, point=P) == 1


def test_residual_examples():
    assert residual("QGOSPER_1", n=2, point=EvalPoint(s=mpq(1, 2), x=mpq(3, 5))) == 0
    for n in range(4):
        assert residual("THM1", n=n, ell=0, point=P) == residual(
            "QGOSPER_1", n=n, point=P
        )
    # PHI65 at ell = 0: single term 1 on both sides
    pt = EvalPoint(s=mpq(1, 2), extras=(mpq(3, 4), mpq(5, 2), mpq(7, 3)))
    assert eval_side("PHI65", "lhs", ell=0, point=pt) == 1
    assert eval_side("PHI65", "rhs", ell=0, point=pt) == 1


def test_ell0_collapses_exact():
    pairs_q = [("THM1", "QGOSPER_1"), ("THM5", "QGOSPER_2")]
    for parent, child in pairs_q:
        for n in range(4):
            for side in ("lhs", "rhs"):
                assert eval_side(parent, side, n=n, ell=0, point=P) == eval_side(
                    child, side, n=n, point=P
                )
    pairs_c = [("PROP3", "GOSPER_1"), ("PROP7", "GOSPER_2"), ("PROP9", "GOSPER_2")]
    for parent, child in pairs_c:
        for n in range(4):
            for side in ("lhs", "rhs"):
                assert eval_side(parent, side, n=n, ell=0, point=PX) == eval_side(
                    child, side, n=n, point=PX
                )


def test_ell1_corollary_value_equalities():
    # printed corollary sides may be rearrangements; equality is on values
    pairs_q = [
        ("THM1", "COR2"),
        ("THM5", "COR6"),
        ("THM11", "COR12"),
        ("THM15", "COR16"),
    ]
    for parent, child in pairs_q:
        for n in range(3):
            assert eval_side(parent, "lhs", n=n, ell=1, point=P) == eval_side(
                child, "lhs", n=n, point=P
            )
            assert eval_side(parent, "rhs", n=n, ell=1, point=P) == eval_side(
                child, "rhs", n=n, point=P
            )
    pairs_c = [
        ("PROP3", "COR4"),
        ("PROP7", "COR8"),
        ("PROP9", "COR10"),
        ("PROP13", "COR14"),
        ("PROP17", "COR18"),
    ]
    for parent, child in pairs_c:
        for n in range(3):
            assert eval_side(parent, "lhs", n=n, ell=1, point=PX) == eval_side(
                child, "lhs", n=n, point=PX
            )
            assert eval_side(parent, "rhs", n=n, ell=1, point=PX) == eval_side(
                child, "rhs", n=n, point=PX
            )


def test_cor18_header_misattribution():
    # COR18 matches PROP17 at ell = 1, not PROP13 at ell = 1
    assert eval_side("PROP13", "lhs", n=2, ell=1, point=PX) != eval_side(
        "COR18", "lhs", n=2, point=PX
    )


def test_rel_identities_equal_one():
    for qid in ("REL6", "REL5", "REL11"):
        for ell in range(5):
            for k in range(7):
                assert residual(qid, ell=ell, k=k, point=P) == 0


def test_cor6_and_equiv_differ_but_both_hold():
    # different LHS series, each matching its own product side
    assert eval_side("COR6", "lhs", n=2, point=P) != eval_side(
        "COR6_EQUIV", "lhs", n=2, point=P
    )
    for n in range(4):
        assert residual("COR6", n=n, point=P) == 0
        assert residual("COR6_EQUIV", n=n, point=P) == 0


def test_phi65_random_points():
    rng = random.Random(42)
    checked = 0
    while checked < 50:
        s = mpq(rng.randrange(1, 40), rng.randrange(2, 60))
        if not 0 < s < 1:
            continue
        extras = tuple(
            mpq(rng.randrange(-30, 31) or 3, rng.randrange(1, 20))
            for _ in range(3)
        )
        ell = rng.randrange(0, 6)
        pt = EvalPoint(s=s, extras=extras)
        try:
            assert residual("PHI65", ell=ell, point=pt) == 0
        except PoleError:
            continue
        checked += 1


def test_phi65_generic_evaluator_matches_ctx_encoding():
    # the production LHS route (generic phi evaluator) against the context
    # encoding used for degree bounds
    desc = get_identity("PHI65")
    pt = EvalPoint(s=mpq(2, 7), extras=(mpq(3, 4), mpq(5, 2), mpq(7, 3)))
    for ell in range(5):
        via_phi = eval_side("PHI65", "lhs", ell=ell, point=pt)
        ctx = QExactContext(pt.s, None, pt.extras)
        via_ctx = desc.lhs_ctx(ctx, None, ell, None)
        assert via_phi == via_ctx


def test_prop9_q2_is_thm5_at_base_q2():
    # evaluating the base-q^2 lift at s equals THM5 at s^2
    s, x = mpq(2, 5), mpq(3, 7)
    lifted = EvalPoint(s=s, x=x)
    squared = EvalPoint(s=s * s, x=x)
    for n in range(3):
        for ell in range(3):
            for side in ("lhs", "rhs"):
                assert eval_side("PROP9_Q2", side, n=n, ell=ell, point=lifted) == \
                    eval_side("THM5", side, n=n, ell=ell, point=squared)


def test_prop9_qh_is_prop9_q2_at_negated_half_power():
    # replacing q by -q^(1/2) in the base-q^2 lift lands on PROP9_QH:
    # PROP9_Q2 reaches only integer q-powers, so its value at q = -sigma
    # must equal PROP9_QH at s = sigma
    sigma, x = mpq(2, 5), mpq(3, 7)
    q2 = get_identity("PROP9_Q2")
    qh = get_identity("PROP9_QH")
    for n in range(3):
        for ell in range(3):
            for slot in ("lhs_ctx", "rhs_ctx"):
                assert getattr(q2, slot)(SubstCtx(-sigma, x), n, ell, None) == \
                    getattr(qh, slot)(QExactContext(sigma, x), n, ell, None)


def test_pole_predicate():
    # x^2 = q is a genuine pole of THM1's evaluator (shared ratio denominator)
    bad = EvalPoint(s=mpq(1, 2), x=mpq(1, 2))
    assert pole_predicate("THM1", n=1, ell=1, point=bad)
    assert not pole_predicate("THM1", n=1, ell=1, point=P)
    # x = 1/6 zeroes (6x - 1) in PROP3's coefficient denominators
    assert pole_predicate("PROP3", n=1, ell=1, point=EvalPoint(x=mpq(1, 6)))


def test_all_identities_hold_at_random_points():
    rng = random.Random(7)
    for d in list_identities():
        if d.kind == "float":
            continue
        checked = 0
        while checked < 3:
            s = mpq(rng.randrange(1, 50), rng.randrange(2, 80))
            if not 0 < s < 1:
                continue
            x = mpq(rng.randrange(-40, 41) or 5, rng.randrange(1, 40))
            extras = tuple(
                mpq(rng.randrange(-20, 21) or 2, rng.randrange(1, 15))
                for _ in range(d.n_extras)
            )
            pt = EvalPoint(
                s=s if d.kind == "q" else None,
                x=x if (d.kind != "q" or d.uses_x) else None,
                extras=extras,
            )
            n = rng.randrange(0, 4) if d.takes_n else None
            ell = rng.randrange(0, 4) if d.takes_ell else None
            k = rng.randrange(0, 4) if d.takes_k else None
            try:
                assert residual(d.qid, n=n, ell=ell, k=k, point=pt) == 0, (
                    d.qid, n, ell, k, pt,
                )
            except PoleError:
                continue
            checked += 1
