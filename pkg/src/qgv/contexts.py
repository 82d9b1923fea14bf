"""Evaluation contexts interpreting one identity encoding three ways.

Each catalog identity side is written once against the small primitive
surface below (powers of q^{1/2}, powers of x, linear factors, q-shifted
factorials, brackets, finite sums).  The three contexts interpret it as:

* :class:`QExactContext`   -- exact rationals at a QPoint, delegating to the
  factorials/series primitives; this is the verification path.
* :class:`QDegreeContext`  -- degree-bound values (see :mod:`qgv.degrees`)
  used to size certification grids.
* :class:`QFloatContext`   -- arbitrary-precision floats at q = 1 - eps for
  the q -> 1 limit checks, with an ill-conditioning guard on every division.

Writing the formula once and swapping interpretations keeps the degree
rules and float evaluations structurally identical to the exact encoding.
"""

import mpmath

from .degrees import ProductBound
from .errors import ArityError, NumericallyIllConditioned
from .factorials import QBase, QFactorArg, fraction_form, q_pochhammer
from .numerics import QPoint, pow_int, rational
from .series import eval_custom_sum


class QExactContext:
    """Exact-rational interpretation at a point (s, x) with optional extras."""

    def __init__(self, s, x=None, extras=()):
        # x = 1 is a harmless placeholder for identities that never read x
        # (their encodings use x_exp = 0 everywhere).
        self.point = QPoint(s, 1 if x is None else x)
        self._has_x = x is not None
        self.extras = tuple(rational(e) for e in extras)
        self._pows = {0: rational(1)}

    def extra(self, i):
        return self.extras[i]

    def qh(self, h):
        v = self._pows.get(h)
        if v is None:
            v = pow_int(self.point.s, h)
            self._pows[h] = v
        return v

    def q(self, m):
        return self.qh(2 * m)

    def x(self, e=1):
        if not self._has_x:
            raise ArityError("this identity takes no x argument")
        return pow_int(self.point.x, e)

    def lin(self, c, h=0, e=0):
        v = rational(c) * self.qh(h)
        if e:
            v *= self.x(e)
        return 1 - v

    def qpoch(self, arg, m, bh=2, sign=1):
        c, h, e = arg
        return q_pochhammer(QFactorArg(c, h, e), QBase(bh, sign), m, self.point)

    def bracket(self, nums, dens, m, bh=2, sign=1):
        return fraction_form(
            [QFactorArg(*t) for t in nums],
            [QFactorArg(*t) for t in dens],
            QBase(bh, sign),
            m,
            self.point,
        )

    def sum_k(self, n, term):
        return eval_custom_sum(n, term)


class QDegreeContext:
    """Degree-bound interpretation; extras must be supplied as exact values."""

    def __init__(self, extras=()):
        self.extras = tuple(rational(e) for e in extras)

    def extra(self, i):
        return self.extras[i]

    def qh(self, h):
        return ProductBound.monomial(h, 0)

    def q(self, m):
        return ProductBound.monomial(2 * m, 0)

    def x(self, e=1):
        return ProductBound.monomial(0, e)

    def lin(self, c, h=0, e=0):
        return ProductBound.linear(c, h, e)

    def qpoch(self, arg, m, bh=2, sign=1):
        c, h, e = arg
        c = rational(c)
        out = ProductBound()
        if m >= 0:
            for j in range(m):
                cj = c if j % 2 == 0 else c * sign
                out = out * ProductBound.linear(cj, h + bh * j, e)
        else:
            for j in range(1, -m + 1):
                cj = c if j % 2 == 0 else c * sign
                out = out / ProductBound.linear(cj, h - bh * j, e)
        return out

    def bracket(self, nums, dens, m, bh=2, sign=1):
        out = ProductBound()
        for t in nums:
            out = out * self.qpoch(t, m, bh, sign)
        for t in dens:
            out = out / self.qpoch(t, m, bh, sign)
        return out

    def sum_k(self, n, term):
        total = term(0)
        for k in range(1, n + 1):
            total = total + term(k)
        return total


class GuardedFloat:
    """mpmath float that refuses divisions by near-zero denominators."""

    __slots__ = ("v", "thr")

    def __init__(self, v, thr):
        self.v = v
        self.thr = thr

    def _val(self, other):
        if isinstance(other, GuardedFloat):
            return other.v
        if isinstance(other, (int, float, mpmath.mpf)):
            return mpmath.mpf(other)
        r = rational(other)
        return mpmath.mpf(int(r.numerator)) / mpmath.mpf(int(r.denominator))

    def _wrap(self, v):
        return GuardedFloat(v, self.thr)

    def __add__(self, other):
        return self._wrap(self.v + self._val(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.v - self._val(other))

    def __rsub__(self, other):
        return self._wrap(self._val(other) - self.v)

    def __mul__(self, other):
        return self._wrap(self.v * self._val(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        d = self._val(other)
        if abs(d) < self.thr:
            raise NumericallyIllConditioned(
                f"denominator magnitude {abs(d)} below threshold {self.thr}"
            )
        return self._wrap(self.v / d)

    def __rtruediv__(self, other):
        if abs(self.v) < self.thr:
            raise NumericallyIllConditioned(
                f"denominator magnitude {abs(self.v)} below threshold {self.thr}"
            )
        return self._wrap(self._val(other) / self.v)

    def __pow__(self, m):
        if m < 0 and abs(self.v) < self.thr:
            raise NumericallyIllConditioned("near-zero base to negative power")
        return self._wrap(self.v ** m)

    def __neg__(self):
        return self._wrap(-self.v)

    def __abs__(self):
        return abs(self.v)


class QFloatContext:
    """Float interpretation at numeric q and x (caller sets mpmath precision).

    Divisions abort with NumericallyIllConditioned when the denominator
    magnitude drops below 2^(-P/2).
    """

    def __init__(self, q, x, precision_bits):
        self.precision_bits = precision_bits
        self.thr = mpmath.mpf(2) ** (-(precision_bits // 2))
        self._s = mpmath.sqrt(mpmath.mpf(q))
        self._x = mpmath.mpf(x) if x is not None else None

    def _wrap(self, v):
        return GuardedFloat(v, self.thr)

    def extra(self, i):
        raise ArityError("float evaluation does not support extra parameters")

    def qh(self, h):
        return self._wrap(self._s ** h)

    def q(self, m):
        return self.qh(2 * m)

    def x(self, e=1):
        if self._x is None:
            raise ArityError("this identity takes no x argument")
        return self._wrap(self._x ** e)

    def lin(self, c, h=0, e=0):
        r = rational(c)
        v = mpmath.mpf(int(r.numerator)) / mpmath.mpf(int(r.denominator))
        v = v * self._s ** h
        if e:
            v = v * self._x ** e
        return self._wrap(1 - v)

    def qpoch(self, arg, m, bh=2, sign=1):
        c, h, e = arg
        av = 1 - self.lin(c, h, e).v  # value of c * s^h * x^e
        base = sign * self._s ** bh
        out = self._wrap(mpmath.mpf(1))
        if m >= 0:
            for j in range(m):
                out = out * (1 - av * base ** j)
        else:
            for j in range(1, -m + 1):
                out = out / self._wrap(1 - av * base ** (-j))
        return out

    def bracket(self, nums, dens, m, bh=2, sign=1):
        out = self._wrap(mpmath.mpf(1))
        for t in nums:
            out = out * self.qpoch(t, m, bh, sign)
        for t in dens:
            out = out / self.qpoch(t, m, bh, sign)
        return out

    def sum_k(self, n, term):
        total = term(0)
        for k in range(1, n + 1):
            total = total + term(k)
        return total
