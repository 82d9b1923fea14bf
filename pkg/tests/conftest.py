"""Shared test helpers: a sympy interpretation of the identity encodings
(the independent oracle for degree bounds and for symbolic spot checks)
and a substituted-base context for the base-change consistency tests."""

import sympy as sp
from gmpy2 import mpq

from qgv.numerics import rational


class SymCtx:
    """Interpret an identity encoding as a sympy rational function of (s, x)."""

    def __init__(self):
        self.s, self.xv = sp.symbols("s x")

    def _c(self, c):
        c = rational(c)
        return sp.Rational(int(c.numerator), int(c.denominator))

    def extra(self, i):
        raise NotImplementedError("symbolic extras not supported")

    def qh(self, h):
        return self.s ** h

    def q(self, m):
        return self.s ** (2 * m)

    def x(self, e=1):
        return self.xv ** e

    def lin(self, c, h=0, e=0):
        return 1 - self._c(c) * self.s ** h * self.xv ** e

    def qpoch(self, arg, m, bh=2, sign=1):
        c, h, e = arg
        out = sp.Integer(1)
        if m >= 0:
            for j in range(m):
                sj = 1 if j % 2 == 0 else sign
                out *= 1 - self._c(c) * sj * self.s ** (h + bh * j) * self.xv ** e
        else:
            for j in range(1, -m + 1):
                sj = 1 if j % 2 == 0 else sign
                out /= 1 - self._c(c) * sj * self.s ** (h - bh * j) * self.xv ** e
        return out

    def bracket(self, nums, dens, m, bh=2, sign=1):
        out = sp.Integer(1)
        for t in nums:
            out *= self.qpoch(t, m, bh, sign)
        for t in dens:
            out /= self.qpoch(t, m, bh, sign)
        return out

    def sum_k(self, n, term):
        return sum((term(kk) for kk in range(n + 1)), sp.Integer(0))


class SubstCtx:
    """Exact context where q is replaced by an explicit rational value.

    Only even s-exponents (integer q-powers) are allowed, which is exactly
    the lattice reachable by base-q^2 encodings; used to check the printed
    base-change steps (q -> q^2 and q -> -q^(1/2)) mechanically.
    """

    def __init__(self, q_value, x):
        self.qv = rational(q_value)
        self.xval = rational(x)

    def extra(self, i):
        raise NotImplementedError

    def qh(self, h):
        if h % 2:
            raise ValueError("substituted context reaches only integer q-powers")
        return self.qv ** (h // 2)

    def q(self, m):
        return self.qv ** m

    def x(self, e=1):
        return self.xval ** e

    def lin(self, c, h=0, e=0):
        return 1 - rational(c) * self.qh(h) * self.x(e) if e else 1 - rational(c) * self.qh(h)

    def qpoch(self, arg, m, bh=2, sign=1):
        c, h, e = arg
        a = rational(c) * self.qh(h) * (self.x(e) if e else mpq(1))
        base = sign * self.qh(bh)
        out = mpq(1)
        if m >= 0:
            for j in range(m):
                out *= 1 - a * base ** j
        else:
            for j in range(1, -m + 1):
                out /= 1 - a * base ** (-j)
        return out

    def bracket(self, nums, dens, m, bh=2, sign=1):
        out = mpq(1)
        for t in nums:
            out *= self.qpoch(t, m, bh, sign)
        for t in dens:
            out /= self.qpoch(t, m, bh, sign)
        return out

    def sum_k(self, n, term):
        return sum((term(kk) for kk in range(n + 1)), mpq(0))
