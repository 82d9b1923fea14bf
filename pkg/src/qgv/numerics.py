"""Exact rational scalars, q-points, and arbitrary-precision floats.

The exact scalar used throughout the package is ``gmpy2.mpq``: an
arbitrary-precision rational kept in canonical form (positive denominator,
gcd-reduced) after every operation, with exact decidable equality.  The
alias ``ExactRational`` names it; ``rational()`` coerces ints, Fractions,
"p/q" strings and mpq values.

q is never a first-class value here.  A :class:`QPoint` stores s = q^{1/2}
and x; every half-integer power q^{m/2} is an integer power s^m, so mixed
integer/half-integer exponent arithmetic stays on a single integer lattice.

High-precision floats are ``mpmath`` values evaluated at an explicit binary
precision.  ``gamma_hp`` and ``pi_hp`` run mpmath with GUARD_BITS extra
bits and round the result back, so the returned value has absolute error
below 2^(-P + GUARD_BITS) (mpmath computes correctly rounded to working
precision within a few ulp; the guard absorbs that slack).
"""

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from gmpy2 import mpq, mpz

from .errors import PoleOfGamma, ZeroToNegativePower

ExactRational = type(mpq())

DEFAULT_PRECISION_BITS = 256

# Extra working bits for mpmath calls; documented error bound for gamma_hp
# and pi_hp is 2^(-P + GUARD_BITS).
GUARD_BITS = 16


def rational(value, den=None):
    """Coerce a value to ExactRational.

    Accepts int, Fraction, mpq, and "p/q" / "p" strings; ``rational(p, q)``
    builds p/q directly.
    """
    if den is not None:
        return mpq(value, den)
    if isinstance(value, str):
        return mpq(value.strip())
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def format_rational(value):
    """Render an ExactRational as "p/q" with the denominator always explicit."""
    v = mpq(value)
    return f"{v.numerator}/{v.denominator}"


def pow_int(b, m):
    """Exact b**m for integer m (empty product = 1 at m = 0).

    Raises ZeroToNegativePower when b = 0 and m < 0.
    """
    b = mpq(b)
    if m < 0 and b == 0:
        raise ZeroToNegativePower("0 cannot be raised to a negative power")
    return b ** m


@dataclass(frozen=True)
class QPoint:
    """An exact evaluation point (s, x) with q = s*s.

    s plays the role of q^{1/2}; powers q^{m/2} are computed as s^m.
    s must avoid {0, 1, -1} (q must not be 0 or 1) and x must be nonzero.
    """

    s: object
    x: object

    def __post_init__(self):
        object.__setattr__(self, "s", rational(self.s))
        object.__setattr__(self, "x", rational(self.x))
        if self.s in (0, 1, -1):
            raise ValueError(f"s must avoid {{0, 1, -1}}, got {self.s}")
        if self.x == 0:
            raise ValueError("x must be nonzero")

    @property
    def q(self):
        return self.s * self.s


def half_power(p, h):
    """q^{h/2} at point p, computed exactly as s^h."""
    return pow_int(p.s, h)


# --- high-precision floats -------------------------------------------------


def hp_context(precision_bits):
    """mpmath context manager at precision_bits + GUARD_BITS working bits."""
    if precision_bits < 8:
        raise ValueError("precision must be at least 8 bits")
    return mpmath.workprec(precision_bits + GUARD_BITS)


def to_hp(value, precision_bits=DEFAULT_PRECISION_BITS):
    """Convert an exact rational (or float) to an mpmath float at precision P.

    Exact up to one rounding of the quotient.
    """
    with hp_context(precision_bits):
        if isinstance(value, (int, float, mpmath.mpf)):
            return +mpmath.mpf(value)
        v = mpq(value)
        return mpmath.mpf(int(v.numerator)) / mpmath.mpf(int(v.denominator))


def gamma_hp(z, precision_bits=DEFAULT_PRECISION_BITS):
    """Gamma(z) at binary precision P with |error| < 2^(-P + GUARD_BITS).

    z may be an exact rational or an mpmath float.  Raises PoleOfGamma at
    nonpositive integers (exactly for rational z; within resolution for
    float z).
    """
    with hp_context(precision_bits):
        if isinstance(z, (mpmath.mpf, float)):
            zf = mpmath.mpf(z)
            if zf <= 0 and zf == mpmath.floor(zf):
                raise PoleOfGamma(f"gamma pole at z={zf}")
        else:
            zq = mpq(z)
            if zq <= 0 and zq.denominator == 1:
                raise PoleOfGamma(f"gamma pole at z={zq}")
            zf = to_hp(zq, precision_bits)
        return +mpmath.gamma(zf)


def pi_hp(precision_bits=DEFAULT_PRECISION_BITS):
    """pi at binary precision P with |error| < 2^(-P + GUARD_BITS)."""
    with hp_context(precision_bits):
        return +mpmath.pi


def is_nonneg_int(value):
    """True when value is a nonnegative integer (int or integral rational)."""
    if isinstance(value, (int, mpz)):
        return value >= 0
    v = mpq(value)
    return v.denominator == 1 and v >= 0
