"""Shifted factorials and q-shifted factorials with negative-index support.

Negative-index conventions (the unique readings satisfying the inverse-index
laws, which the test suite enforces):

    (x)_{-m}    = (-1)^m / prod_{k=1..m} (k - x)
    (a; Q)_{-m} = 1 / prod_{j=1..m} (1 - a Q^{-j})

Arguments of q-shifted factorials are represented symbolically as
coeff * q^{half_exp/2} * x^{x_exp} (:class:`QFactorArg`) so the same
identity descriptor evaluates at any point; bases are q^{half_exp/2} with
an optional sign flag (:class:`QBase`), covering bases q, q^2, q^3, q^6
and -q^{1/2}.
"""

from dataclasses import dataclass

from gmpy2 import mpq

from .errors import PoleError
from .numerics import QPoint, pow_int, rational


@dataclass(frozen=True)
class QFactorArg:
    """Argument coeff * q^{half_exp/2} * x^{x_exp} of a q-shifted factorial."""

    coeff: object
    half_exp: int = 0
    x_exp: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", rational(self.coeff))
        if self.coeff == 0 and (self.half_exp or self.x_exp):
            raise ValueError("a zero argument must be the literal constant 0")

    def value(self, p: QPoint):
        v = self.coeff * pow_int(p.s, self.half_exp)
        if self.x_exp:
            v = v * pow_int(p.x, self.x_exp)
        return v


@dataclass(frozen=True)
class QBase:
    """Base sign * q^{half_exp/2} of a q-shifted factorial (sign in {1, -1})."""

    half_exp: int
    sign: int = 1

    def __post_init__(self):
        if self.half_exp == 0:
            raise ValueError("base exponent must be nonzero")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def value(self, p: QPoint):
        return self.sign * pow_int(p.s, self.half_exp)


BASE_Q = QBase(2)
BASE_Q2 = QBase(4)
BASE_Q3 = QBase(6)
BASE_Q6 = QBase(12)


def rising_factorial(x, n):
    """Shifted factorial (x)_n over exact rationals, valid for any integer n."""
    x = rational(x)
    if n == 0:
        return mpq(1)
    if n > 0:
        v = mpq(1)
        for k in range(n):
            v *= x + k
        return v
    m = -n
    v = mpq(1)
    for k in range(1, m + 1):
        f = k - x
        if f == 0:
            raise PoleError(
                f"negative-index shifted factorial pole: ({x})_{n} hits k - x = 0 at k={k}",
                factor=f"{k} - {x}",
            )
        v *= f
    return mpq(-1) ** m / v


def qpoch_scalar(a, base_value, n):
    """(a; Q)_n for already-evaluated scalars a and Q = base_value."""
    a = rational(a)
    q = rational(base_value)
    if n == 0:
        return mpq(1)
    if n > 0:
        v = mpq(1)
        qi = mpq(1)
        for _ in range(n):
            v *= 1 - a * qi
            qi *= q
        return v
    m = -n
    v = mpq(1)
    qj = mpq(1)
    for j in range(1, m + 1):
        qj /= q
        f = 1 - a * qj
        if f == 0:
            raise PoleError(
                f"negative-index q-shifted factorial pole: (1 - a*Q^-{j}) = 0 "
                f"with a={a}, Q={q}",
                factor=f"1 - ({a})*({q})^-{j}",
            )
        v *= f
    return 1 / v


def q_pochhammer(arg: QFactorArg, base: QBase, n: int, p: QPoint):
    """q-shifted factorial (arg; base)_n evaluated exactly at point p."""
    return qpoch_scalar(arg.value(p), base.value(p), n)


def fraction_form(numer_args, denom_args, base: QBase, n: int, p: QPoint):
    """Bracketed ratio of q-shifted factorials at a common index and base.

    prod (a; base)_n over numerator args divided by the same over denominator
    args.  Raises PoleError naming the bracket slot whose value vanished.
    """
    v = mpq(1)
    for a in numer_args:
        v *= q_pochhammer(a, base, n, p)
    for a in denom_args:
        d = q_pochhammer(a, base, n, p)
        if d == 0:
            raise PoleError(
                f"bracket denominator vanished: "
                f"({a.coeff} * q^({a.half_exp}/2) * x^{a.x_exp}; "
                f"q^({base.half_exp}/2))_{n} = 0",
                factor=f"(arg {a}; base {base})_{n}",
            )
        v /= d
    return v


def classical_fraction_form(numer, denom, n: int):
    """Bracketed ratio of shifted factorials: prod (a)_n / prod (alpha)_n."""
    v = mpq(1)
    for a in numer:
        v *= rising_factorial(a, n)
    for a in denom:
        d = rising_factorial(a, n)
        if d == 0:
            raise PoleError(
                f"bracket denominator vanished: ({a})_{n} = 0",
                factor=f"({a})_{n}",
            )
        v /= d
    return v
