"""Exact bivariate polynomials over the rationals.

Polynomials are sparse maps from exponent pairs ``(i, j)`` (meaning
``x**i * y**j``) to nonzero rational coefficients.  Coefficients are kept
as plain ``int`` whenever they are integral and as ``Fraction`` otherwise,
so integer-coefficient work (determinants, pseudo-remainders) runs on
machine-native Python integers.

Terms are ordered graded-lexicographically with ``x > y``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

Rational = Union[int, Fraction]
Monomial = Tuple[int, int]
Point = Tuple[Rational, Rational]

__all__ = [
    "Poly",
    "RationalFunction",
    "Rational",
    "Monomial",
    "X",
    "Y",
    "ONE",
    "ZERO",
    "as_rational",
    "exact_divide",
    "factor_multiplicity",
    "canonical_form",
    "gcd",
    "lcm",
    "monomials_up_to",
    "grlex_key",
]


def as_rational(value) -> Rational:
    """Coerce ``value`` to the normalized coefficient type (int or Fraction)."""
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return as_rational(Fraction(value))
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


def _norm(c: Rational) -> Rational:
    if type(c) is int:
        return c
    return c.numerator if c.denominator == 1 else c


def _div(a: Rational, b: Rational) -> Rational:
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r == 0:
            return q
    return _norm(Fraction(a) / b)


def grlex_key(m: Monomial) -> Tuple[int, int]:
    """Sort key: larger key means larger monomial in graded lex (x > y)."""
    return (m[0] + m[1], m[0])


def monomials_up_to(n: int) -> list[Monomial]:
    """All monomials of total degree <= n, graded-lex descending."""
    out = []
    for deg in range(n, -1, -1):
        for i in range(deg, -1, -1):
            out.append((i, deg - i))
    return out


class Poly:
    """An immutable polynomial in x, y with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Rational]] = None):
        clean: Dict[Monomial, Rational] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in monomial {(i, j)}")
                c = as_rational(c)
                if c:
                    clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Rational]) -> "Poly":
        # trusted constructor: terms already normalized and zero-free
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "Poly":
        c = as_rational(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "Poly":
        return cls({(i, j): c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Rational]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Rational]]:
        """Terms in graded-lex descending order."""
        for m in sorted(self._terms, key=grlex_key, reverse=True):
            yield m, self._terms[m]

    def coeff(self, m: Monomial) -> Rational:
        return self._terms.get(m, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0, 0) in self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(i + j for i, j in self._terms)

    def degree_in(self, var: str) -> int:
        k = _var_index(var)
        if not self._terms:
            return -1
        return max(m[k] for m in self._terms)

    @property
    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=grlex_key)

    @property
    def leading_coeff(self) -> Rational:
        return self._terms[self.leading_monomial]

    def homogeneous_part(self, k: int) -> "Poly":
        return Poly._raw({m: c for m, c in self._terms.items() if m[0] + m[1] == k})

    def constant_term(self) -> Rational:
        return self._terms.get((0, 0), 0)

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self._terms.values())

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        res = dict(a)
        for m, c in b.items():
            v = res.get(m)
            if v is None:
                res[m] = c
            else:
                v = _norm(v + c)
                if v:
                    res[m] = v
                else:
                    del res[m]
        return Poly._raw(res)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        res = dict(self._terms)
        for m, c in other._terms.items():
            v = res.get(m)
            if v is None:
                res[m] = -c
            else:
                v = _norm(v - c)
                if v:
                    res[m] = v
                else:
                    del res[m]
        return Poly._raw(res)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        res: Dict[Monomial, Rational] = {}
        get = res.get
        for (i2, j2), c2 in b.items():
            for (i1, j1), c1 in a.items():
                k = (i1 + i2, j1 + j2)
                res[k] = get(k, 0) + c1 * c2
        return Poly._raw({m: _norm(c) for m, c in res.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = as_rational(c)
        if not c:
            return ZERO
        if c == 1:
            return self
        return Poly._raw({m: _norm(v * c) for m, v in self._terms.items()})

    def __truediv__(self, c) -> "Poly":
        if isinstance(c, Poly):
            q = exact_divide(self, c)
            if q is None:
                raise ArithmeticError("polynomial division is not exact")
            return q
        c = as_rational(c)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return Poly._raw({m: _div(v, c) for m, v in self._terms.items()})

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == Poly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- calculus and evaluation ------------------------------------------

    def diff(self, var: str) -> "Poly":
        """Formal partial derivative with respect to ``'x'`` or ``'y'``."""
        k = _var_index(var)
        res = {}
        for m, c in self._terms.items():
            e = m[k]
            if e:
                nm = (m[0] - 1, m[1]) if k == 0 else (m[0], m[1] - 1)
                res[nm] = c * e
        return Poly._raw(res)

    def evaluate(self, point: Point) -> Rational:
        x0, y0 = as_rational(point[0]), as_rational(point[1])
        total: Rational = 0
        for (i, j), c in self._terms.items():
            total += c * x0**i * y0**j
        return _norm(total) if isinstance(total, Fraction) else total

    def __call__(self, x0, y0) -> Rational:
        return self.evaluate((x0, y0))

    def translate(self, point: Point) -> "Poly":
        """Return ``p(x + x0, y + y0)``."""
        x0, y0 = as_rational(point[0]), as_rational(point[1])
        if not x0 and not y0:
            return self
        xs = _binomial_powers(x0, 0, max((m[0] for m in self._terms), default=0))
        ys = _binomial_powers(y0, 1, max((m[1] for m in self._terms), default=0))
        res: Dict[Monomial, Rational] = {}
        for (i, j), c in self._terms.items():
            for (a, _), ca in xs[i].items():
                for (_, b), cb in ys[j].items():
                    k = (a, b)
                    res[k] = res.get(k, 0) + c * ca * cb
        return Poly._raw({m: _norm(v) for m, v in res.items() if v})

    # -- printing ---------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


def _var_index(var: str) -> int:
    if var == "x":
        return 0
    if var == "y":
        return 1
    raise ValueError(f"unknown variable {var!r}; expected 'x' or 'y'")


def _coerce(obj):
    if isinstance(obj, Poly):
        return obj
    if isinstance(obj, (int, Fraction)) and not isinstance(obj, bool):
        return Poly.const(obj)
    return NotImplemented


def _binomial_powers(c: Rational, axis: int, n: int) -> list[Dict[Monomial, Rational]]:
    # expansions of (v + c)^k for k = 0..n as monomial dicts along one axis
    out = []
    for k in range(n + 1):
        d = {}
        for e in range(k + 1):
            coef = math.comb(k, e) * c ** (k - e)
            if coef:
                d[(e, 0) if axis == 0 else (0, e)] = coef
        out.append(d)
    return out


ZERO = Poly._raw({})
ONE = Poly._raw({(0, 0): 1})
X = Poly._raw({(1, 0): 1})
Y = Poly._raw({(0, 1): 1})


def format_rational(c: Rational) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_poly(p: Poly) -> str:
    """Graded-lex descending text with explicit ``*`` and ``^``."""
    if p.is_zero():
        return "0"
    parts = []
    for (i, j), c in p.items():
        factors = []
        if i:
            factors.append("x" if i == 1 else f"x^{i}")
        if j:
            factors.append("y" if j == 1 else f"y^{j}")
        mag = -c if c < 0 else c
        if not factors:
            body = format_rational(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([format_rational(mag)] + factors)
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


# -- division ------------------------------------------------------------------


def exact_divide(p: Poly, q: Poly) -> Optional[Poly]:
    """Return ``p / q`` if ``q`` divides ``p`` exactly, else ``None``.

    Division proceeds by leading terms in graded-lex order; when ``q | p``
    every intermediate remainder is a multiple of ``q``, so the first
    leading term not divisible by ``lt(q)`` proves non-divisibility.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    if p.degree < q.degree:
        return None
    qt = q._terms
    if len(qt) == 1:
        (qm, qc), = qt.items()
        res = {}
        for m, c in p._terms.items():
            i, j = m[0] - qm[0], m[1] - qm[1]
            if i < 0 or j < 0:
                return None
            res[(i, j)] = _div(c, qc)
        return Poly._raw(res)
    qlm = max(qt, key=grlex_key)
    qlc = qt[qlm]
    rest = [(m, c) for m, c in qt.items() if m != qlm]
    rem = dict(p._terms)
    quo: Dict[Monomial, Rational] = {}
    # a max-heap would avoid the repeated scan, but remainders stay small
    # relative to the cost of the subtraction loop below
    while rem:
        m = max(rem, key=grlex_key)
        i, j = m[0] - qlm[0], m[1] - qlm[1]
        if i < 0 or j < 0:
            return None
        c = _div(rem.pop(m), qlc)
        quo[(i, j)] = c
        for (a, b), cq in rest:
            k = (a + i, b + j)
            v = rem.get(k, 0) - c * cq
            if v:
                rem[k] = _norm(v) if type(v) is not int else v
            else:
                rem.pop(k, None)
    return Poly._raw(quo)


def factor_multiplicity(p: Poly, f: Poly) -> int:
    """Largest m with ``f**m`` dividing ``p``."""
    if p.is_zero():
        raise ValueError("multiplicity of a factor in the zero polynomial is infinite")
    if f.is_constant():
        raise ValueError("factor must be non-constant")
    m = 0
    while True:
        q = exact_divide(p, f)
        if q is None:
            return m
        p = q
        m += 1


# -- content, canonical form, gcd --------------------------------------------------


def _content_and_denominator(p: Poly) -> Tuple[int, int]:
    g = 0
    den = 1
    for c in p._terms.values():
        if type(c) is int:
            g = math.gcd(g, c)
        else:
            g = math.gcd(g, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
    return g, den


def canonical_form(p: Poly) -> Tuple[Poly, Rational]:
    """Return ``(q, u)`` with ``p == u * q``, ``q`` primitive integral with
    positive graded-lex leading coefficient."""
    if p.is_zero():
        raise ValueError("zero polynomial has no canonical form")
    _, den = _content_and_denominator(p)
    scaled = p.scale(den) if den != 1 else p
    g = 0
    for c in scaled._terms.values():
        g = math.gcd(g, c)
    if scaled.leading_coeff < 0:
        g = -g
    q = Poly._raw({m: c // g for m, c in scaled._terms.items()})
    return q, _norm(Fraction(g, den))


def canonical(p: Poly) -> Poly:
    """Canonical representative; the zero polynomial maps to itself."""
    if p.is_zero():
        return p
    return canonical_form(p)[0]


def _as_x_poly(p: Poly) -> Dict[int, Poly]:
    # view p in (Q[y])[x]
    parts: Dict[int, Dict[Monomial, Rational]] = {}
    for (i, j), c in p._terms.items():
        parts.setdefault(i, {})[(0, j)] = c
    return {i: Poly._raw(t) for i, t in parts.items()}


def _gcd_y(p: Poly, q: Poly) -> Poly:
    # Euclid over Q for polynomials in y alone; result canonical (or zero)
    while not q.is_zero():
        p, q = q, _rem_y(p, q)
    return canonical(p)


def _rem_y(p: Poly, q: Poly) -> Poly:
    dq = q.degree_in("y")
    lc = q._terms[(0, dq)]
    rem = dict(p._terms)
    while rem:
        dr = max(j for _, j in rem)
        if dr < dq:
            break
        c = _div(rem[(0, dr)], lc)
        for (_, j), cq in q._terms.items():
            k = (0, j + dr - dq)
            v = _norm(rem.get(k, 0) - c * cq)
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return Poly._raw(rem)


def _content_x(p: Poly) -> Poly:
    return reduce(_gcd_y, _as_x_poly(p).values(), ZERO)


def _lc_x(p: Poly) -> Tuple[int, Poly]:
    parts = _as_x_poly(p)
    k = max(parts)
    return k, parts[k]


def _prem_x(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of ``a`` by ``b`` viewed in (Q[y])[x]."""
    db, lcb = _lc_x(b)
    r = a
    e = a.degree_in("x") - db + 1
    while not r.is_zero():
        dr, lcr = _lc_x(r)
        if dr < db:
            break
        r = lcb * r - (lcr * Poly._raw({(dr - db, 0): 1})) * b
        e -= 1
    if e > 0:
        r = lcb**e * r
    return r


def _primitive_x(p: Poly) -> Poly:
    c = _content_x(p)
    q = exact_divide(p, c)
    assert q is not None
    return q


def gcd(p: Poly, q: Poly) -> Poly:
    """Greatest common divisor in canonical form (primitive PRS in x over Q[y])."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero():
        return canonical(q)
    if q.is_zero():
        return canonical(p)
    cont = _gcd_y(_content_x(p), _content_x(q))
    a, b = _primitive_x(p), _primitive_x(q)
    if a.degree_in("x") < b.degree_in("x"):
        a, b = b, a
    while b.degree_in("x") > 0:
        r = _prem_x(a, b)
        if r.is_zero():
            break
        a, b = b, _primitive_x(r)
    if b.degree_in("x") <= 0:
        # b is a nonzero element of Q[y] that is primitive in x: a unit
        b = ONE
    return canonical(cont * b)


def lcm(p: Poly, q: Poly) -> Poly:
    g = gcd(p, q)
    return canonical(exact_divide(p * q, g))


def radical(p: Poly) -> Poly:
    """Square-free part ``p / gcd(p, p_x, p_y)`` in canonical form."""
    g = gcd(gcd(p, p.diff("x")), p.diff("y")) if not p.is_constant() else ONE
    return canonical(exact_divide(p, g))


# -- rational functions --------------------------------------------------------


class RationalFunction:
    """Reduced quotient ``num / den`` with ``den`` in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = ONE):
        num, den = _coerce(num), _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        g = gcd(num, den)
        if not g.is_constant():
            num, den = exact_divide(num, g), exact_divide(den, g)
        cden, u = canonical_form(den)
        self.num = num / u
        self.den = cden

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            other = RationalFunction(_coerce(other))
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        other = _rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        other = _rf(other)
        return RationalFunction(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        other = _rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        other = _rf(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def diff(self, var: str) -> "RationalFunction":
        return RationalFunction(
            self.num.diff(var) * self.den - self.num * self.den.diff(var), self.den * self.den
        )

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


def _rf(obj) -> RationalFunction:
    if isinstance(obj, RationalFunction):
        return obj
    return RationalFunction(_coerce(obj))


def poly_sum(polys: Iterable[Poly]) -> Poly:
    acc: Dict[Monomial, Rational] = {}
    for p in polys:
        for m, c in p._terms.items():
            acc[m] = acc.get(m, 0) + c
    return Poly._raw({m: _norm(c) for m, c in acc.items() if c})
