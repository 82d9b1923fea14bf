"""Formula encodings for every catalog identity.

q-kind sides are written once against the context primitive surface
(:mod:`qgv.contexts`) and reused for exact evaluation, degree bounding and
float evaluation.  Conventions:

* exponents are integer powers of s = q^{1/2}: an argument c * q^{a/2} * x^e
  is the triple (c, a, e) handed to ctx.lin / ctx.qpoch / ctx.bracket;
* ctx.q(m) is q^m, ctx.qh(h) is q^{h/2};
* brackets list numerator triples then denominator triples, with the base
  given as its s-exponent (bh=2 for base q, 4 for q^2, 6 for q^3, 12 for q^6).

Classical sides are plain exact functions of (n, ell, x): the series side
goes through the generic terminating evaluator, the product side through
shifted-factorial brackets.

Every encoding follows its printed source shape exactly, including the
shapes flagged as suspected misprints; disagreements are for the verifier
to report, not for the encoding to fix.
"""

import mpmath
from gmpy2 import mpq

from .factorials import classical_fraction_form as cff
from .numerics import gamma_hp, hp_context, to_hp
from .series import HyperSpec, eval_custom_sum, eval_hyper

HALF = mpq(1, 2)
Z34 = mpq(3, 4)


def _cubic_sum(ctx, n, uppers, lowers):
    """sum_{k=0}^{n} (q^{-3n}; q^3)_k [uppers; lowers | q]_k q^k."""

    def term(k):
        return (
            ctx.qpoch((1, -6 * n, 0), k, bh=6)
            * ctx.bracket(uppers, lowers, k)
            * ctx.q(k)
        )

    return ctx.sum_k(n, term)


# --- QGOSPER_1 / QGOSPER_2 ---------------------------------------------------


def qgosper1_lhs(ctx, n, l, k):
    return _cubic_sum(
        ctx,
        n,
        [(1, 0, 1), (1, 2, -1)],
        [(1, 2, 0), (-1, 2, 0), (1, 1, 0), (-1, 1, 0), (1, -6 * n, 0)],
    )


def qgosper1_rhs(ctx, n, l, k):
    return ctx.bracket(
        [(1, 2, 1), (1, 4, -1)], [(1, 2, 0), (1, 4, 0)], n, bh=6
    )


def qgosper2_lhs(ctx, n, l, k):
    return _cubic_sum(
        ctx,
        n,
        [(1, 0, 1), (1, 4, -1)],
        [(1, 2, 0), (-1, 2, 0), (1, 3, 0), (-1, 3, 0), (1, -2 - 6 * n, 0)],
    )


def qgosper2_rhs(ctx, n, l, k):
    return ctx.bracket(
        [(1, 4, 1), (1, 8, -1)], [(1, 4, 0), (1, 8, 0)], n, bh=6
    )


# --- PHI65: terminating very-well-poised 6phi5 summation ---------------------
# Free parameters r (= sqrt of the usual a, kept rational), b, c; depth ell.


def phi65_lhs(ctx, n, l, k):
    r, b, c = ctx.extra(0), ctx.extra(1), ctx.extra(2)
    a = r * r
    uppers = [(a, 0, 0), (r, 2, 0), (-r, 2, 0), (b, 0, 0), (c, 0, 0), (1, -2 * l, 0)]
    lowers = [(r, 0, 0), (-r, 0, 0), (a / b, 2, 0), (a / c, 2, 0), (a, 2 + 2 * l, 0)]
    zc, zh = a / (b * c), 2 + 2 * l  # z = zc * q^{zh/2}

    def term(j):
        # balanced series: the correction factor is 1; (q; q)_j fills the
        # implicit base slot of the bracket.
        v = ctx.bracket(uppers, [(1, 2, 0)] + lowers, j)
        return v * zc ** j * ctx.qh(zh * j)

    return ctx.sum_k(l, term)


def phi65_rhs(ctx, n, l, k):
    r, b, c = ctx.extra(0), ctx.extra(1), ctx.extra(2)
    a = r * r
    return ctx.bracket(
        [(a, 2, 0), (a / (b * c), 2, 0)],
        [(a / b, 2, 0), (a / c, 2, 0)],
        l,
    )


# --- REL6 / REL5 / REL11: bracket-sum relations with constant value 1 --------


def rel6_lhs(ctx, n, l, k):
    pre = ctx.bracket(
        [(1, 2 - 2 * l, -1), (-1, 2 - 2 * l, -1)],
        [(1, 2 - 2 * l, -2), (-1, 2 - 2 * l + 2 * k, 0)],
        l,
    )

    def term(i):
        return (
            (-1) ** i
            * ctx.q(l * i)
            * (ctx.lin(1, 4 * i - 2, 2) / ctx.lin(1, -2, 2))
            * ctx.bracket(
                [(1, -2 * l, 0), (1, 2 * k, 1), (1, -2, 2)],
                [(1, 2, 0), (1, 0, 1), (1, 2 * l, 2)],
                i,
            )
            * ctx.bracket(
                [(1, 2 - 2 * l + 2 * k, -1)], [(1, 2 - 2 * l, -1)], l - i
            )
        )

    return pre * ctx.sum_k(l, term)


def rel5_lhs(ctx, n, l, k):
    pre = ctx.bracket(
        [(1, 4 - 2 * l, -1), (-1, 3 - 2 * l, -1)],
        [(1, 4 - 2 * l, -2), (-1, 3 - 2 * l + 2 * k, 0)],
        l,
    )

    def term(i):
        return (
            (-1) ** i
            * ctx.qh((2 * l - 1) * i)
            * (ctx.lin(1, 4 * i - 4, 2) / ctx.lin(1, -4, 2))
            * ctx.bracket(
                [(1, -2 * l, 0), (1, 2 * k, 1), (1, -4, 2)],
                [(1, 2, 0), (1, -2, 1), (1, 2 * l - 2, 2)],
                i,
            )
            * ctx.bracket(
                [(1, 4 - 2 * l + 2 * k, -1)], [(1, 4 - 2 * l, -1)], l - i
            )
        )

    return pre * ctx.sum_k(l, term)


def rel11_lhs(ctx, n, l, k):
    pre = ctx.bracket(
        [(1, -2 * l, -1), (1, 1 - 2 * l, -1)],
        [(1, -2 * l, -2), (1, 1 - 2 * l + 2 * k, 0)],
        l,
    )

    def term(i):
        return (
            ctx.qh((2 * l + 1) * i)
            * (ctx.lin(1, 4 * i, 2) / ctx.lin(1, 0, 2))
            * ctx.bracket(
                [(1, -2 * l, 0), (1, 2 * k, 1), (1, 0, 2)],
                [(1, 2, 0), (1, 2, 1), (1, 2 * l + 2, 2)],
                i,
            )
            * ctx.bracket([(1, 2 * k - 2 * l, -1)], [(1, -2 * l, -1)], l - i)
        )

    return pre * ctx.sum_k(l, term)


def const_one(ctx, n, l, k):
    return ctx.qh(0)


# --- THM1 family -------------------------------------------------------------


def thm1_lhs(ctx, n, l, k):
    return _cubic_sum(
        ctx,
        n,
        [(1, 0, 1), (1, 2 - 2 * l, -1)],
        [(1, 2, 0), (-1, 2 - 2 * l, 0), (1, 1, 0), (-1, 1, 0), (1, -6 * n, 0)],
    )


def thm1_rhs(ctx, n, l, k):
    pre = ctx.bracket(
        [(1, 0, 1), (-1, 0, 1)], [(1, 0, 2), (-1, 0, 0)], l
    )

    def term(i):
        return (
            (-1) ** i
            * ctx.q(l * i)
            * (ctx.lin(1, 4 * i - 2, 2) / ctx.lin(1, -2, 2))
            * ctx.bracket(
                [(1, -2 * l, 0), (1, -2, 2)], [(1, 2, 0), (1, 2 * l, 2)], i
            )
            * ctx.bracket(
                [(1, 2 + 2 * i, 1), (1, 4 - 2 * i, -1)],
                [(1, 2, 0), (1, 4, 0)],
                n,
                bh=6,
            )
        )

    return pre * ctx.sum_k(l, term)


def cor2_lhs(ctx, n, l, k):
    return _cubic_sum(
        ctx,
        n,
        [(1, 0, 1), (1, 0, -1)],
        [(1, 2, 0), (-1, 0, 0), (1, 1, 0), (-1, 1, 0), (1, -6 * n, 0)],
    )


def cor2_rhs(ctx, n, l, k):
    a = ctx.bracket(
        [(1, 2, 1), (1, 4, -1)], [(1, 2, 0), (1, 4, 0)], n, bh=6
    )
    b = ctx.bracket(
        [(1, 4, 1), (1, 2, -1)], [(1, 2, 0), (1, 4, 0)], n, bh=6
    )
    return (a + b) / 2


# --- THM5 family -------------------------------------------------------------


def thm5_lhs(ctx, n, l, k):
    return _cubic_sum(
        ctx,
        n,
        [(1, 0, 1), (1, 4 - 2 * l, -1)],
        [(1, 2, 0), (-1, 2, 0), (1, 3, 0), (-1, 3 - 2 * l, 0), (1, -2 - 6 * n, 0)],
    )


def thm5_rhs(ctx, n, l, k):
    pre = ctx.bracket(
        [(1, -2, 1), (-1, -1, 1)], [(1, -2, 2), (-1, -1, 0)], l
    )

    def term(i):
        return (
            (-1) ** i
            * ctx.qh((2 * l - 1) * i)
            * (ctx.lin(1, 4 * i - 4, 2) / ctx.lin(1, -4, 2))
            * ctx.bracket(
                [(1, -2 * l, 0), (1, 0, 1), (1, -4, 2)],
                [(1, 2, 0), (1, -2, 1), (1, 2 * l - 2, 2)],
                i,
            )
            * ctx.bracket(
                [(1, 4 + 2 * i, 1), (1, 8 - 2 * i, -1)],
                [(1, 4, 0), (1, 8, 0)],
                n,
                bh=6,
            )
        )

    return pre * ctx.sum_k(l, term)


def cor6_lhs(ctx, n, l, k):
    return _cubic_sum(
        ctx,
        n,
        [(1, 0, 1), (1, 2, -1)],
        [(1, 2, 0), (-1, 2, 0), (1, 3, 0), (-1, 1, 0), (1, -2 - 6 * n, 0)],
    )


def cor6_rhs(ctx, n, l, k):
    a = ctx.bracket(
        [(1, 6, 1), (1, 6, -1)], [(1, 4, 0), (1, 8, 0)], n, bh=6
    )
    b = ctx.bracket(
        [(1, 4, 1), (1, 8, -1)], [(1, 4, 0), (1, 8, 0)], n, bh=6
    )
    ca = ctx.lin(1, 0, 1) / (ctx.lin(-1, 1, 0) * ctx.lin(1, -1, 1))
    cb = ctx.lin(1, -2, 1) / (ctx.lin(-1, -1, 0) * ctx.lin(1, -1, 1))
    return ca * a + cb * b


def cor6_equiv_lhs(ctx, n, l, k):
    return _cubic_sum(
        ctx,
        n,
        [(1, 0, 1), (1, 2, -1)],
        [(1, 2, 0), (-1, 2, 0), (1, 1, 0), (-1, 3, 0), (1, -2 - 6 * n, 0)],
    )


def cor6_equiv_rhs(ctx, n, l, k):
    a = ctx.bracket(
        [(1, 6, 1), (1, 6, -1)], [(1, 4, 0), (1, 8, 0)], n, bh=6
    )
    b = ctx.bracket(
        [(1, 4, 1), (1, 8, -1)], [(1, 4, 0), (1, 8, 0)], n, bh=6
    )
    ca = ctx.lin(1, 0, 1) / (ctx.lin(1, 1, 0) * ctx.lin(-1, -1, 1))
    cb = ctx.lin(1, -2, 1) / (ctx.lin(1, -1, 0) * ctx.lin(-1, -1, 1))
    return ca * a + cb * b


# --- PROP9 intermediates (base q^2 lift of THM5 and its half-power image) ----


def prop9_q2_lhs(ctx, n, l, k):
    def term(j):
        return (
            ctx.qpoch((1, -12 * n, 0), j, bh=12)
            * ctx.bracket(
                [(1, 0, 1), (1, 8 - 4 * l, -1)],
                [
                    (1, 4, 0),
                    (-1, 4, 0),
                    (1, 6, 0),
                    (-1, 6 - 4 * l, 0),
                    (1, -4 - 12 * n, 0),
                ],
                j,
                bh=4,
            )
            * ctx.q(2 * j)
        )

    return ctx.sum_k(n, term)


def prop9_q2_rhs(ctx, n, l, k):
    pre = ctx.bracket(
        [(1, -4, 1), (-1, -2, 1)], [(1, -4, 2), (-1, -2, 0)], l, bh=4
    )

    def term(i):
        return (
            (-1) ** i
            * ctx.qh((4 * l - 2) * i)
            * (ctx.lin(1, 8 * i - 8, 2) / ctx.lin(1, -8, 2))
            * ctx.bracket(
                [(1, -4 * l, 0), (1, 0, 1), (1, -8, 2)],
                [(1, 4, 0), (1, -4, 1), (1, 4 * l - 4, 2)],
                i,
                bh=4,
            )
            * ctx.bracket(
                [(1, 8 + 4 * i, 1), (1, 16 - 4 * i, -1)],
                [(1, 8, 0), (1, 16, 0)],
                n,
                bh=12,
            )
        )

    return pre * ctx.sum_k(l, term)


def prop9_qh_lhs(ctx, n, l, k):
    return _cubic_sum(
        ctx,
        n,
        [(1, 0, 1), (1, 4 - 2 * l, -1)],
        [(1, 2, 0), (-1, 2, 0), (1, 3 - 2 * l, 0), (-1, 3, 0), (1, -2 - 6 * n, 0)],
    )


def prop9_qh_rhs(ctx, n, l, k):
    pre = ctx.bracket(
        [(1, -2, 1), (1, -1, 1)], [(1, -2, 2), (1, -1, 0)], l
    )

    def term(i):
        return (
            ctx.qh((2 * l - 1) * i)
            * (ctx.lin(1, 4 * i - 4, 2) / ctx.lin(1, -4, 2))
            * ctx.bracket(
                [(1, -2 * l, 0), (1, 0, 1), (1, -4, 2)],
                [(1, 2, 0), (1, -2, 1), (1, 2 * l - 2, 2)],
                i,
            )
            * ctx.bracket(
                [(1, 4 + 2 * i, 1), (1, 8 - 2 * i, -1)],
                [(1, 4, 0), (1, 8, 0)],
                n,
                bh=6,
            )
        )

    return pre * ctx.sum_k(l, term)


# --- THM11 family ------------------------------------------------------------


def thm11_lhs(ctx, n, l, k):
    return _cubic_sum(
        ctx,
        n,
        [(1, 0, 1), (1, -2 * l, -1)],
        [(1, 2, 0), (-1, 0, 0), (1, 1 - 2 * l, 0), (-1, 1, 0), (1, -6 * n, 0)],
    )


def thm11_rhs(ctx, n, l, k):
    pre = ctx.bracket(
        [(1, 2, 1), (1, 1, 1)], [(1, 2, 2), (1, 1, 0)], l
    )

    def term(i):
        braces = ctx.bracket(
            [(1, 2 + 2 * i, 1), (1, 4 - 2 * i, -1)],
            [(1, 2, 0), (1, 4, 0)],
            n,
            bh=6,
        ) + ctx.bracket(
            [(1, 4 + 2 * i, 1), (1, 2 - 2 * i, -1)],
            [(1, 2, 0), (1, 4, 0)],
            n,
            bh=6,
        )
        return (
            ctx.qh((2 * l + 1) * i)
            * (ctx.lin(-1, 2 * i, 1) / (2 * ctx.lin(-1, 0, 1)))
            * ctx.bracket(
                [(1, -2 * l, 0), (1, 0, 2)], [(1, 2, 0), (1, 2 * l + 2, 2)], i
            )
            * braces
        )

    return pre * ctx.sum_k(l, term)


def cor12_lhs(ctx, n, l, k):
    return _cubic_sum(
        ctx,
        n,
        [(1, 0, 1), (1, -2, -1)],
        [(1, 2, 0), (-1, 0, 0), (1, -1, 0), (-1, 1, 0), (1, -6 * n, 0)],
    )


def cor12_rhs(ctx, n, l, k):
    den = 2 * ctx.lin(1, 1, 0) * ctx.lin(-1, 1, 1)
    a = ctx.bracket([(1, 2, 1), (1, 4, -1)], [(1, 2, 0), (1, 4, 0)], n, bh=6)
    b = ctx.bracket([(1, 4, 1), (1, 2, -1)], [(1, 2, 0), (1, 4, 0)], n, bh=6)
    c = ctx.bracket([(1, 6, 1), (1, 0, -1)], [(1, 2, 0), (1, 4, 0)], n, bh=6)
    return ctx.lin(1, 2, 1) / den * a + b / 2 - ctx.qh(1) * ctx.lin(1, 0, 1) / den * c


# --- THM15 family ------------------------------------------------------------


def thm15_lhs(ctx, n, l, k):
    return _cubic_sum(
        ctx,
        n,
        [(1, 0, 1), (1, 2 - 2 * l, -1)],
        [(1, 2, 0), (-1, 2 - 2 * l, 0), (1, 1, 0), (-1, 3, 0), (1, -2 - 6 * n, 0)],
    )


def thm15_rhs(ctx, n, l, k):
    pre = ctx.bracket(
        [(1, 0, 1), (-1, 0, 1)], [(1, 0, 2), (-1, 0, 0)], l
    )

    def term(i):
        a = ctx.bracket(
            [(1, 6 + 2 * i, 1), (1, 6 - 2 * i, -1)],
            [(1, 4, 0), (1, 8, 0)],
            n,
            bh=6,
        )
        b = ctx.bracket(
            [(1, 4 + 2 * i, 1), (1, 8 - 2 * i, -1)],
            [(1, 4, 0), (1, 8, 0)],
            n,
            bh=6,
        )
        braces = (
            ctx.lin(1, 2 * i, 1) / ctx.lin(-1, 2 * i - 1, 1) * a
            - ctx.qh(1) * ctx.lin(1, 2 * i - 2, 1) / ctx.lin(-1, 2 * i - 1, 1) * b
        )
        return (
            (-1) ** i
            * ctx.q(l * i)
            * (ctx.lin(1, 4 * i - 2, 2) / (ctx.lin(1, -2, 2) * ctx.lin(1, 1, 0)))
            * ctx.bracket(
                [(1, -2 * l, 0), (1, -2, 2)], [(1, 2, 0), (1, 2 * l, 2)], i
            )
            * braces
        )

    return pre * ctx.sum_k(l, term)


def cor16_lhs(ctx, n, l, k):
    return _cubic_sum(
        ctx,
        n,
        [(1, 0, 1), (1, 0, -1)],
        [(1, 2, 0), (-1, 0, 0), (1, 1, 0), (-1, 3, 0), (1, -2 - 6 * n, 0)],
    )


def cor16_rhs(ctx, n, l, k):
    a = ctx.bracket([(1, 8, 1), (1, 4, -1)], [(1, 4, 0), (1, 8, 0)], n, bh=6)
    b = ctx.bracket([(1, 6, 1), (1, 6, -1)], [(1, 4, 0), (1, 8, 0)], n, bh=6)
    c = ctx.bracket([(1, 4, 1), (1, 8, -1)], [(1, 4, 0), (1, 8, 0)], n, bh=6)
    ca = ctx.lin(1, 2, 1) / (2 * ctx.lin(1, 1, 0) * ctx.lin(-1, 1, 1))
    cb = ctx.lin(1, 0, 1) ** 2 / (2 * ctx.lin(-1, -1, 1) * ctx.lin(-1, 1, 1))
    cc = ctx.qh(1) * ctx.lin(1, -2, 1) / (2 * ctx.lin(1, 1, 0) * ctx.lin(-1, -1, 1))
    return ca * a + cb * b - cc * c


# --- classical sides ---------------------------------------------------------


def _hyper3(a0, a1, b1, b2, n):
    """3F2[a0, a1, -n; b1, b2 | 3/4] via the terminating evaluator."""
    return eval_hyper(
        HyperSpec((a0, a1, -n), (b1, b2), Z34, termination_index=2)
    )


def gosper1_lhs(n, l, x):
    return _hyper3(3 * x, 1 - 3 * x, HALF, -3 * n, n)


def gosper1_rhs(n, l, x):
    return cff(
        [mpq(1, 3) + x, mpq(2, 3) - x], [mpq(1, 3), mpq(2, 3)], n
    )


def gosper2_lhs(n, l, x):
    return _hyper3(3 * x, 2 - 3 * x, mpq(3, 2), -1 - 3 * n, n)


def gosper2_rhs(n, l, x):
    return cff(
        [mpq(2, 3) + x, mpq(4, 3) - x], [mpq(2, 3), mpq(4, 3)], n
    )


def prop3_lhs(n, l, x):
    return _hyper3(3 * x, 1 - l - 3 * x, HALF, -3 * n, n)


def prop3_rhs(n, l, x):
    pre = cff([3 * x], [6 * x], l)

    def term(i):
        coeff = (-1) ** i * (6 * x + 2 * i - 1) / (6 * x - 1)
        return (
            coeff
            * cff([-l, 6 * x - 1], [1, 6 * x + l], i)
            * cff(
                [mpq(1 + i, 3) + x, mpq(2 - i, 3) - x],
                [mpq(1, 3), mpq(2, 3)],
                n,
            )
        )

    return pre * eval_custom_sum(l, term)


def cor4_lhs(n, l, x):
    return _hyper3(3 * x, -3 * x, HALF, -3 * n, n)


def cor4_rhs(n, l, x):
    a = cff([mpq(1, 3) + x, mpq(2, 3) - x], [mpq(1, 3), mpq(2, 3)], n)
    b = cff([mpq(2, 3) + x, mpq(1, 3) - x], [mpq(1, 3), mpq(2, 3)], n)
    return (a + b) / 2


def prop7_lhs(n, l, x):
    return _hyper3(3 * x, 2 - l - 3 * x, mpq(3, 2), -1 - 3 * n, n)


def prop7_rhs(n, l, x):
    pre = cff([3 * x - 1], [6 * x - 1], l)

    def term(i):
        coeff = (-1) ** i * ((3 * x + i - 1) / (3 * x - 1)) ** 2
        return (
            coeff
            * cff([-l, 6 * x - 2], [1, 6 * x + l - 1], i)
            * cff(
                [mpq(2 + i, 3) + x, mpq(4 - i, 3) - x],
                [mpq(2, 3), mpq(4, 3)],
                n,
            )
        )

    return pre * eval_custom_sum(l, term)


def cor8_lhs(n, l, x):
    return _hyper3(3 * x, 1 - 3 * x, mpq(3, 2), -1 - 3 * n, n)


def cor8_rhs(n, l, x):
    a = cff([1 + x, 1 - x], [mpq(2, 3), mpq(4, 3)], n)
    b = cff([mpq(2, 3) + x, mpq(4, 3) - x], [mpq(2, 3), mpq(4, 3)], n)
    return 3 * x / (6 * x - 1) * a + (3 * x - 1) / (6 * x - 1) * b


def prop9_lhs(n, l, x):
    return _hyper3(3 * x, 2 - l - 3 * x, mpq(3, 2) - l, -1 - 3 * n, n)


def prop9_rhs(n, l, x):
    pre = cff([3 * x - 1, 3 * x - HALF], [6 * x - 1, -HALF], l)

    def term(i):
        coeff = ((3 * x + i - 1) / (3 * x - 1)) ** 2
        return (
            coeff
            * cff([-l, 6 * x - 2], [1, 6 * x + l - 1], i)
            * cff(
                [mpq(2 + i, 3) + x, mpq(4 - i, 3) - x],
                [mpq(2, 3), mpq(4, 3)],
                n,
            )
        )

    return pre * eval_custom_sum(l, term)


def cor10_lhs(n, l, x):
    return _hyper3(3 * x, 1 - 3 * x, HALF, -1 - 3 * n, n)


def cor10_rhs(n, l, x):
    a = cff([1 + x, 1 - x], [mpq(2, 3), mpq(4, 3)], n)
    b = cff([mpq(2, 3) + x, mpq(4, 3) - x], [mpq(2, 3), mpq(4, 3)], n)
    return 3 * x * a + (1 - 3 * x) * b


def prop13_lhs(n, l, x):
    return _hyper3(3 * x, -l - 3 * x, HALF - l, -3 * n, n)


def prop13_rhs(n, l, x):
    pre = cff([1 + 3 * x, HALF + 3 * x], [1 + 6 * x, HALF], l) / 2

    def term(i):
        a = cff(
            [mpq(1 + i, 3) + x, mpq(2 - i, 3) - x], [mpq(1, 3), mpq(2, 3)], n
        )
        b = cff(
            [mpq(2 + i, 3) + x, mpq(1 - i, 3) - x], [mpq(1, 3), mpq(2, 3)], n
        )
        return cff([-l, 6 * x], [1, 1 + 6 * x + l], i) * (a + b)

    return pre * eval_custom_sum(l, term)


def cor14_lhs(n, l, x):
    return _hyper3(3 * x, -1 - 3 * x, -HALF, -3 * n, n)


def cor14_rhs(n, l, x):
    a = cff([mpq(1, 3) + x, mpq(2, 3) - x], [mpq(1, 3), mpq(2, 3)], n)
    b = cff([mpq(2, 3) + x, mpq(1, 3) - x], [mpq(1, 3), mpq(2, 3)], n)
    c = cff([1 + x, -x], [mpq(1, 3), mpq(2, 3)], n)
    return (1 + 3 * x) / 2 * a + b / 2 - 3 * x / 2 * c


def prop17_lhs(n, l, x):
    return _hyper3(3 * x, 1 - l - 3 * x, HALF, -1 - 3 * n, n)


def prop17_rhs(n, l, x):
    pre = cff([3 * x], [6 * x], l)

    def term(i):
        a = cff(
            [mpq(3 + i, 3) + x, mpq(3 - i, 3) - x], [mpq(2, 3), mpq(4, 3)], n
        )
        b = cff(
            [mpq(2 + i, 3) + x, mpq(4 - i, 3) - x], [mpq(2, 3), mpq(4, 3)], n
        )
        coeff = (-1) ** i * (6 * x + 2 * i - 1) / (6 * x - 1)
        return (
            coeff
            * cff([-l, 6 * x - 1], [1, 6 * x + l], i)
            * ((3 * x + i) * a - (3 * x + i - 1) * b)
        )

    return pre * eval_custom_sum(l, term)


def cor18_lhs(n, l, x):
    return _hyper3(3 * x, -3 * x, HALF, -1 - 3 * n, n)


def cor18_rhs(n, l, x):
    a = cff([mpq(4, 3) + x, mpq(2, 3) - x], [mpq(2, 3), mpq(4, 3)], n)
    b = cff([mpq(2, 3) + x, mpq(4, 3) - x], [mpq(2, 3), mpq(4, 3)], n)
    return (1 + 3 * x) / 2 * a + (1 - 3 * x) / 2 * b


# --- float-only closing identity ----------------------------------------------


def limit_2f1_lhs_float(x, precision_bits):
    """2F1[3x, 2-3x; 3/2 | 1/4] summed to convergence at precision P.

    The term ratio tends to 1/4, so the truncation error is below the
    first omitted term times 4/3; terms are added until they drop under
    2^-(P+8).
    """
    with hp_context(precision_bits):
        xf = to_hp(x, precision_bits)
        cutoff = mpmath.mpf(2) ** (-(precision_bits + 8))
        term = mpmath.mpf(1)
        total = mpmath.mpf(1)
        k = 0
        while abs(term) > cutoff:
            term = (
                term
                * (3 * xf + k)
                * (2 - 3 * xf + k)
                / ((1 + k) * (mpmath.mpf(3) / 2 + k) * 4)
            )
            total += term
            k += 1
            if k > 64 * precision_bits:
                break
        return +total


def limit_2f1_rhs_float(x, precision_bits):
    """Gamma(2/3) Gamma(4/3) / (Gamma(2/3 + x) Gamma(4/3 - x)) at precision P."""
    with hp_context(precision_bits):
        num = gamma_hp(mpq(2, 3), precision_bits) * gamma_hp(
            mpq(4, 3), precision_bits
        )
        den = gamma_hp(mpq(2, 3) + mpq(x), precision_bits) * gamma_hp(
            mpq(4, 3) - mpq(x), precision_bits
        )
        return +(num / den)
