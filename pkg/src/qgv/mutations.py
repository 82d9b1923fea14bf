"""Seeded descriptor mutations for harness sensitivity checks.

Each entry corrupts exactly one spot of one identity encoding (exponent
off by one, sign flip, or bracket base swap q <-> q^3) and returns a full
registry with the corrupted descriptor swapped in.  The default suite run
over any of these registries must report at least one failure with a
counterexample; that is the proof the harness can detect a wrongly
printed formula.
"""

from dataclasses import replace

from .identities import list_identities


def _cubic_sum(ctx, n, uppers, lowers):
    def term(k):
        return (
            ctx.qpoch((1, -6 * n, 0), k, bh=6)
            * ctx.bracket(uppers, lowers, k)
            * ctx.q(k)
        )

    return ctx.sum_k(n, term)


def _qgosper1_rhs_exp_plus1(ctx, n, l, k):
    # q^2/x -> q^3/x in the product side
    return ctx.bracket([(1, 2, 1), (1, 6, -1)], [(1, 2, 0), (1, 4, 0)], n, bh=6)


def _qgosper1_rhs_base_swap(ctx, n, l, k):
    # bracket base q^3 -> q
    return ctx.bracket([(1, 2, 1), (1, 4, -1)], [(1, 2, 0), (1, 4, 0)], n, bh=2)


def _qgosper2_lhs_sign_flip(ctx, n, l, k):
    # denominator parameter -q -> q
    return _cubic_sum(
        ctx,
        n,
        [(1, 0, 1), (1, 4, -1)],
        [(1, 2, 0), (1, 2, 0), (1, 3, 0), (-1, 3, 0), (1, -2 - 6 * n, 0)],
    )


def _thm1_rhs_exp_plus1(ctx, n, l, k):
    # q^{l*i} -> q^{l*i + 1} inside the i-sum
    pre = ctx.bracket([(1, 0, 1), (-1, 0, 1)], [(1, 0, 2), (-1, 0, 0)], l)

    def term(i):
        return (
            (-1) ** i
            * ctx.q(l * i + 1)
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


def _thm5_rhs_exp_minus1(ctx, n, l, k):
    # i-bracket argument x^2 q^{-2} -> x^2 q^{-3}
    pre = ctx.bracket([(1, -2, 1), (-1, -1, 1)], [(1, -2, 2), (-1, -1, 0)], l)

    def term(i):
        return (
            (-1) ** i
            * ctx.qh((2 * l - 1) * i)
            * (ctx.lin(1, 4 * i - 4, 2) / ctx.lin(1, -4, 2))
            * ctx.bracket(
                [(1, -2 * l, 0), (1, 0, 1), (1, -6, 2)],
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


_MUTATION_SPECS = {
    "QGOSPER_1_RHS_EXP_PLUS1": ("QGOSPER_1", "rhs_ctx", _qgosper1_rhs_exp_plus1),
    "THM1_RHS_EXP_PLUS1": ("THM1", "rhs_ctx", _thm1_rhs_exp_plus1),
    "QGOSPER_2_LHS_SIGN_FLIP": ("QGOSPER_2", "lhs_ctx", _qgosper2_lhs_sign_flip),
    "QGOSPER_1_RHS_BASE_SWAP": ("QGOSPER_1", "rhs_ctx", _qgosper1_rhs_base_swap),
    "THM5_RHS_EXP_MINUS1": ("THM5", "rhs_ctx", _thm5_rhs_exp_minus1),
}

MUTATION_NAMES = tuple(_MUTATION_SPECS)


def mutated_registry(name):
    """Full catalog with one corrupted descriptor; also returns the id."""
    qid, slot, fn = _MUTATION_SPECS[name]
    registry = []
    for desc in list_identities():
        if desc.qid == qid:
            desc = replace(desc, **{slot: fn})
        registry.append(desc)
    return registry, qid
