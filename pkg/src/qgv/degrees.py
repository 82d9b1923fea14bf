"""Degree-bound arithmetic for rational functions in (s, x).

Identity sides are rational functions of s = q^{1/2} and x built from
linear factors (1 - c s^h x^e), monomials, and rational constants.  To
certify an instance on a finite grid we need an upper bound on the degrees
of numerator and denominator when the residual is written as a single
fraction.  The values here track exactly that through the same arithmetic
the evaluators perform:

* :class:`ProductBound` -- a pure product of linear factors and a monomial.
  Its full factor structure is known, so it can appear as a divisor.
* :class:`RatioBound` -- a general N/D value.  The numerator is tracked
  only by degree upper bounds (cancellation can only lower them), while
  the denominator is kept as the exact multiset of linear factors the
  arithmetic divided by, plus a monomial.  Exact denominators make sums
  cheap: the common denominator of two values is the per-factor maximum,
  so bounds stay near-linear in the number of terms instead of doubling
  per addition.

Only division by product-form values is supported; every denominator in
the identity catalog is a product of Pochhammer factors, explicit linear
factors, monomials and constants, so this restriction costs nothing.
"""

from dataclasses import dataclass

from gmpy2 import mpq

from .numerics import rational


@dataclass(frozen=True)
class DegreeBound:
    """Bounds deg_s, deg_x valid for both numerator and denominator."""

    deg_s: int
    deg_x: int


def _key(c, h, e):
    """Canonical key of the cleared factor s^{h-} x^{e-} - c s^{h+} x^{e+}."""
    return (mpq(c), int(h), int(e))


def _key_deg(key):
    """(deg_s, deg_x, clear_s, clear_x) of a factor key."""
    _, h, e = key
    return abs(h), abs(e), max(0, -h), max(0, -e)


def _is_scalar(v):
    return isinstance(v, (int, mpq, type(mpq(0)))) or type(v).__name__ in (
        "Fraction",
        "mpq",
    )


class ProductBound:
    """c * s^sa * x^xb * prod factor^mult with integer (possibly negative) mults."""

    __slots__ = ("sa", "xb", "fac")

    def __init__(self, sa=0, xb=0, fac=None):
        self.sa = sa
        self.xb = xb
        self.fac = fac or {}

    @staticmethod
    def monomial(sa=0, xb=0):
        return ProductBound(sa, xb)

    @staticmethod
    def linear(c, h, e):
        c = rational(c)
        if c == 0:
            return ProductBound()
        if c == 1 and h == 0 and e == 0:
            raise ValueError("degenerate factor 1 - 1 is identically zero")
        return ProductBound(0, 0, {_key(c, h, e): 1})

    def inverse(self):
        return ProductBound(-self.sa, -self.xb, {k: -m for k, m in self.fac.items()})

    def _combine(self, other, sign):
        fac = dict(self.fac)
        for k, m in other.fac.items():
            fac[k] = fac.get(k, 0) + sign * m
            if fac[k] == 0:
                del fac[k]
        return ProductBound(
            self.sa + sign * other.sa, self.xb + sign * other.xb, fac
        )

    def __mul__(self, other):
        if _is_scalar(other):
            return self
        if isinstance(other, ProductBound):
            return self._combine(other, 1)
        if isinstance(other, RatioBound):
            return other * self
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return self
        if isinstance(other, ProductBound):
            return self._combine(other, -1)
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return self.inverse()
        return NotImplemented

    def __pow__(self, m):
        out = ProductBound()
        if m == 0:
            return out
        step = self if m > 0 else self.inverse()
        for _ in range(abs(m)):
            out = out._combine(step, 1)
        return out

    def __neg__(self):
        return self

    def to_ratio(self):
        ns = max(self.sa, 0)
        nx = max(self.xb, 0)
        ms = max(-self.sa, 0)
        mx = max(-self.xb, 0)
        den = {}
        for k, m in self.fac.items():
            ds, dx, cs, cx = _key_deg(k)
            if m > 0:
                ns += m * ds
                nx += m * dx
                ms += m * cs
                mx += m * cx
            else:
                ns += -m * cs
                nx += -m * cx
                den[k] = den.get(k, 0) - m
        return RatioBound(ns, nx, ms, mx, den)

    def __add__(self, other):
        return self.to_ratio() + other

    __radd__ = __add__

    def __sub__(self, other):
        return self.to_ratio() - other

    def __rsub__(self, other):
        return self.to_ratio() - other


class RatioBound:
    """N/D with numerator degree bounds and exact denominator structure."""

    __slots__ = ("ns", "nx", "ms", "mx", "den")

    def __init__(self, ns=0, nx=0, ms=0, mx=0, den=None):
        self.ns = ns
        self.nx = nx
        self.ms = ms
        self.mx = mx
        self.den = den or {}

    def _den_degrees(self):
        ds, dx = self.ms, self.mx
        for k, m in self.den.items():
            fs, fx, _, _ = _key_deg(k)
            ds += m * fs
            dx += m * fx
        return ds, dx

    def bound(self):
        ds, dx = self._den_degrees()
        return DegreeBound(max(self.ns, ds), max(self.nx, dx))

    @staticmethod
    def _coerce(v):
        if _is_scalar(v):
            return RatioBound()
        if isinstance(v, ProductBound):
            return v.to_ratio()
        if isinstance(v, RatioBound):
            return v
        raise TypeError(f"cannot interpret {v!r} as a degree bound")

    def __mul__(self, other):
        if _is_scalar(other):
            return self
        o = self._coerce(other)
        den = dict(self.den)
        for k, m in o.den.items():
            den[k] = den.get(k, 0) + m
        return RatioBound(
            self.ns + o.ns, self.nx + o.nx, self.ms + o.ms, self.mx + o.mx, den
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return self
        if isinstance(other, ProductBound):
            return self * other.inverse()
        raise TypeError(
            "degree mode supports division only by product-form expressions"
        )

    def __add__(self, other):
        o = self._coerce(other)
        lden = {}
        for k in set(self.den) | set(o.den):
            lden[k] = max(self.den.get(k, 0), o.den.get(k, 0))
        lms = max(self.ms, o.ms)
        lmx = max(self.mx, o.mx)

        def extra(v):
            es = lms - v.ms
            ex = lmx - v.mx
            for k, m in lden.items():
                fs, fx, _, _ = _key_deg(k)
                diff = m - v.den.get(k, 0)
                es += diff * fs
                ex += diff * fx
            return es, ex

        es1, ex1 = extra(self)
        es2, ex2 = extra(o)
        return RatioBound(
            max(self.ns + es1, o.ns + es2),
            max(self.nx + ex1, o.nx + ex2),
            lms,
            lmx,
            lden,
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + other

    def __rsub__(self, other):
        return self + other

    def __neg__(self):
        return self

    def __pow__(self, m):
        if m < 0:
            raise TypeError("negative powers of non-product expressions")
        out = RatioBound()
        for _ in range(m):
            out = out * self
        return out
