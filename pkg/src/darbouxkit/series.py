"""Truncated power series in one parameter with exact rational coefficients."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Tuple

from .polyring import Rational, _norm, as_rational

DEFAULT_ORDER = 16

__all__ = ["TruncSeries", "DEFAULT_ORDER", "InconclusiveTruncation"]


class InconclusiveTruncation(ArithmeticError):
    """The truncation order is too small to decide the question asked."""


def _rational_sqrt(c: Rational) -> Rational:
    c = Fraction(c)
    if c < 0:
        raise ValueError(f"{c} is negative")
    n, d = c.numerator, c.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        raise ValueError(f"constant term {c} is not the square of a rational")
    return _norm(Fraction(rn, rd))


class TruncSeries:
    """``c_0 + c_1 t + ... + c_K t^K + O(t^{K+1})``.

    ``exact`` records that all coefficients beyond K are known to vanish,
    i.e. the value is a genuine polynomial in t.
    """

    __slots__ = ("coeffs", "exact")

    def __init__(self, coeffs: Sequence, order: int = DEFAULT_ORDER, exact: bool = True):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [as_rational(c) for c in coeffs]
        if len(cs) > order + 1:
            if any(cs[order + 1:]):
                exact = False
            cs = cs[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        self.coeffs: Tuple[Rational, ...] = tuple(cs)
        self.exact = exact

    @classmethod
    def const(cls, c, order: int = DEFAULT_ORDER) -> "TruncSeries":
        return cls([c], order)

    @classmethod
    def param(cls, order: int = DEFAULT_ORDER) -> "TruncSeries":
        return cls([0, 1], order, exact=order >= 1)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def valuation(self):
        """Index of the first nonzero coefficient, or None if zero to order K."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def _top(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __getitem__(self, k: int) -> Rational:
        return self.coeffs[k]

    def _coerce(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries.const(other, self.order)

    def truncate(self, order: int) -> "TruncSeries":
        if order >= self.order:
            return self
        return TruncSeries(self.coeffs, order, self.exact and self._top() <= order)

    def __add__(self, other) -> "TruncSeries":
        other = self._coerce(other)
        k = min(self.order, other.order)
        exact = self.exact and other.exact and self._top() <= k and other._top() <= k
        return TruncSeries([_norm(a + b) for a, b in zip(self.coeffs, other.coeffs)], k, exact)

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-c for c in self.coeffs], self.order, self.exact)

    def __sub__(self, other) -> "TruncSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            c = as_rational(other)
            return TruncSeries([_norm(v * c) for v in self.coeffs], self.order, self.exact)
        k = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (k + 1)
        for i in range(k + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(k + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        ta, tb = self._top(), other._top()
        if (ta < 0 and self.exact) or (tb < 0 and other.exact):
            exact = True
        else:
            exact = self.exact and other.exact and ta + tb <= k
        return TruncSeries([_norm(c) for c in out], k, exact)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncSeries":
        if n < 0:
            return self.invert() ** (-n)
        result = TruncSeries.const(1, self.order)
        for _ in range(n):
            result = result * self
        return result

    def invert(self) -> "TruncSeries":
        """Multiplicative inverse of a unit series."""
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        k = self.order
        inv = [0] * (k + 1)
        inv[0] = _norm(Fraction(1) / c0)
        for n in range(1, k + 1):
            s = sum(self.coeffs[i] * inv[n - i] for i in range(1, n + 1))
            inv[n] = _norm(-Fraction(s) / c0)
        exact = self._top() == 0
        return TruncSeries(inv, k, exact)

    def __truediv__(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return self * other.invert()
        c = as_rational(other)
        return TruncSeries([_norm(Fraction(v) / c) for v in self.coeffs], self.order, self.exact)

    def sqrt(self) -> "TruncSeries":
        """Square root with positive constant term; c_0 must be a rational square."""
        c0 = self.coeffs[0]
        if not c0:
            raise ValueError("square root needs a nonzero constant term")
        s0 = _rational_sqrt(c0)
        k = self.order
        s = [0] * (k + 1)
        s[0] = s0
        for n in range(1, k + 1):
            acc = sum(s[i] * s[n - i] for i in range(1, n))
            s[n] = _norm((Fraction(self.coeffs[n]) - acc) / (2 * s0))
        return TruncSeries(s, k, self._top() == 0)

    def evaluate(self, t0) -> Rational:
        t0 = as_rational(t0)
        total = 0
        for c in reversed(self.coeffs):
            total = total * t0 + c
        return _norm(Fraction(total)) if isinstance(total, Fraction) else total

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            other = self._coerce(other)
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c]
        tail = "" if self.exact else f" + O(t^{self.order + 1})"
        return "TruncSeries(" + (" + ".join(terms) or "0") + tail + ")"
