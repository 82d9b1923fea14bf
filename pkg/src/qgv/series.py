"""Generic terminating evaluators for classical F-series and basic phi-series.

Both evaluators accumulate terms by the term-ratio recurrence (multiply a
running term by the exact ratio t_{k+1}/t_k) rather than rebuilding O(k)
products per term; the test suite checks them against direct-product
oracles.  Termination is always declared explicitly via the index of the
terminating upper parameter, never auto-detected, so results cannot depend
on parameter scan order.

The phi-series includes the balancing factor {(-1)^k q^{C(k,2)}}^(s-r)
from its definition; the factor is identically 1 for balanced parameter
counts (s = r).
"""

from dataclasses import dataclass, field

from gmpy2 import mpq

from .errors import NonTerminating, PoleError
from .factorials import QBase, QFactorArg
from .numerics import QPoint, rational


@dataclass(frozen=True)
class HyperSpec:
    """A terminating (1+r)F(s) series: upper a_0..a_r, lower b_1..b_s, arg z.

    ``termination_index`` names the upper parameter equal to -n; the sum
    runs over k = 0..n.
    """

    upper: tuple
    lower: tuple
    z: object
    termination_index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(rational(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(rational(b) for b in self.lower))
        object.__setattr__(self, "z", rational(self.z))

    def cutoff(self):
        if not 0 <= self.termination_index < len(self.upper):
            raise NonTerminating("termination index out of range")
        a = self.upper[self.termination_index]
        if a > 0 or a.denominator != 1:
            raise NonTerminating(
                f"upper parameter {a} at index {self.termination_index} "
                "is not a nonpositive integer"
            )
        return int(-a)


@dataclass(frozen=True)
class QHyperSpec:
    """A terminating (1+r)phi(s) basic series over a declared base.

    ``termination_index`` names the upper argument equal to base^(-n)
    (coeff 1 for positive bases, half_exp = -n * base.half_exp, no x part).
    """

    upper: tuple
    lower: tuple
    z: QFactorArg
    base: QBase = field(default_factory=lambda: QBase(2))
    termination_index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))

    def cutoff(self):
        if not 0 <= self.termination_index < len(self.upper):
            raise NonTerminating("termination index out of range")
        a = self.upper[self.termination_index]
        bh = self.base.half_exp
        if a.x_exp != 0 or a.half_exp > 0 or a.half_exp % bh != 0:
            raise NonTerminating(
                f"upper argument {a} is not an integer power base^(-n)"
            )
        n = -a.half_exp // bh
        if a.coeff != self.base.sign ** n:
            raise NonTerminating(
                f"upper argument {a} is not base^(-{n}) (coefficient mismatch)"
            )
        return n


def eval_custom_sum(n, term):
    """Exact sum_{k=0}^{n} term(k); PoleError propagates from term."""
    total = mpq(0)
    for k in range(n + 1):
        total += term(k)
    return total


def eval_hyper(spec: HyperSpec):
    """Exact value of a terminating hypergeometric series.

    Per-term ratio: t_{k+1}/t_k = z * prod(a_i + k) / ((1 + k) prod(b_j + k)).
    """
    n = spec.cutoff()
    term = mpq(1)
    total = mpq(1)
    for k in range(n):
        num = spec.z
        for a in spec.upper:
            num *= a + k
        den = mpq(1 + k)
        for b in spec.lower:
            f = b + k
            if f == 0:
                raise PoleError(
                    f"lower parameter {b} zeroes a denominator factor at k={k}",
                    factor=f"({b})_{k + 1}",
                )
            den *= f
        term = term * num / den
        total += term
    return total


def eval_qhyper(spec: QHyperSpec, p: QPoint):
    """Exact value of a terminating basic series, balancing factor included.

    Per-term ratio: t_{k+1}/t_k =
        z * prod(1 - a_i Q^k) / ((1 - Q^{k+1}) prod(1 - b_j Q^k))
          * ((-1) Q^k)^(s - r).
    """
    n = spec.cutoff()
    q = spec.base.value(p)
    z = spec.z.value(p)
    excess = len(spec.lower) - (len(spec.upper) - 1)
    uppers = [a.value(p) for a in spec.upper]
    lowers = [b.value(p) for b in spec.lower]

    term = mpq(1)
    total = mpq(1)
    qk = mpq(1)
    for k in range(n):
        num = z
        for a in uppers:
            num *= 1 - a * qk
        den = 1 - qk * q
        if den == 0:
            raise PoleError(
                f"base factor (1 - Q^{k + 1}) vanished with Q={q}",
                factor=f"(Q; Q)_{k + 1}",
            )
        for b, barg in zip(lowers, spec.lower):
            f = 1 - b * qk
            if f == 0:
                raise PoleError(
                    f"lower argument {barg} zeroes a denominator factor at k={k}",
                    factor=f"(arg {barg}; base {spec.base})_{k + 1}",
                )
            den *= f
        if excess:
            num *= (-qk) ** excess
        term = term * num / den
        qk *= q
        total += term
    return total
