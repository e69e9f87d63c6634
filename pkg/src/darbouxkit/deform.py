"""One-parameter deformations of vector fields and their invariant curves.

A deformation is represented over the truncated series ring Q[[t]]/(t^{K+1}):
polynomials in x, y whose coefficients are :class:`TruncSeries`.  Every
answer that depends on a vanishing order reports how much truncation margin
was left, and running out of margin raises :class:`InconclusiveTruncation`.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .invariants import ExponentialFactor, NotInvariantError, cofactor, exponential_cofactor
from .parsing import evaluate_ast, parse_ast
from .polyring import Monomial, Poly, X, Y, canonical_form, exact_divide, gcd, grlex_key
from .series import DEFAULT_ORDER, InconclusiveTruncation, TruncSeries
from .vfield import VectorField

__all__ = [
    "ParamPoly",
    "ParamVectorField",
    "CurveDerivative",
    "WitnessResult",
    "IdenticalFamiliesError",
    "parse_param_poly",
    "param_derive",
    "param_cofactor",
    "limit_at_zero",
    "curve_derivative",
    "cofactor_expansion_check",
    "derivative_to_exponential",
    "christopher_field",
    "christopher_family",
    "geometric_lower_bound_witness",
]


class IdenticalFamiliesError(ValueError):
    pass


class ParamPoly:
    """Polynomial in x, y with truncated-series coefficients, all of one order."""

    __slots__ = ("terms", "order")

    def __init__(self, terms: Dict[Monomial, TruncSeries], order: int = DEFAULT_ORDER):
        self.order = order
        self.terms = {m: (s if s.order == order else _reorder(s, order))
                      for m, s in terms.items() if not (s.is_zero() and s.exact)}

    @classmethod
    def from_poly(cls, p: Poly, order: int = DEFAULT_ORDER) -> "ParamPoly":
        return cls({m: TruncSeries.const(c, order) for m, c in p.terms.items()}, order)

    @classmethod
    def from_series(cls, s: TruncSeries) -> "ParamPoly":
        return cls({(0, 0): s}, s.order)

    @classmethod
    def from_t_polys(cls, polys: Sequence[Poly], order: int = DEFAULT_ORDER) -> "ParamPoly":
        """``sum(polys[k] * t**k)``."""
        acc: Dict[Monomial, List] = {}
        for k, p in enumerate(polys):
            for m, c in p.terms.items():
                acc.setdefault(m, [0] * len(polys))[k] = c
        return cls({m: TruncSeries(cs, order) for m, cs in acc.items()}, order)

    @property
    def exact(self) -> bool:
        return all(s.exact for s in self.terms.values())

    def coefficient(self, k: int) -> Poly:
        """The polynomial multiplying t^k."""
        return Poly({m: s[k] for m, s in self.terms.items()})

    def limit(self) -> Poly:
        return self.coefficient(0)

    @property
    def valuation(self) -> Optional[int]:
        vals = [s.valuation for s in self.terms.values() if s.valuation is not None]
        return min(vals) if vals else None

    @property
    def degree(self) -> int:
        degs = [m[0] + m[1] for m, s in self.terms.items() if not s.is_zero()]
        return max(degs) if degs else -1

    def is_zero(self) -> bool:
        return all(s.is_zero() for s in self.terms.values())

    def specialize(self, t0) -> Poly:
        """Evaluate the truncated coefficients at ``t = t0``."""
        return Poly({m: s.evaluate(t0) for m, s in self.terms.items()})

    def _coerce(self, other) -> "ParamPoly":
        if isinstance(other, ParamPoly):
            return other
        if isinstance(other, Poly):
            return ParamPoly.from_poly(other, self.order)
        if isinstance(other, TruncSeries):
            return ParamPoly.from_series(other)
        return ParamPoly.from_poly(Poly.const(other), self.order)

    def __add__(self, other) -> "ParamPoly":
        other = self._coerce(other)
        order = min(self.order, other.order)
        out = dict(self.terms)
        for m, s in other.terms.items():
            out[m] = out[m] + s if m in out else s
        return ParamPoly(out, order)

    __radd__ = __add__

    def __neg__(self) -> "ParamPoly":
        return ParamPoly({m: -s for m, s in self.terms.items()}, self.order)

    def __sub__(self, other) -> "ParamPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "ParamPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "ParamPoly":
        other = self._coerce(other)
        order = min(self.order, other.order)
        out: Dict[Monomial, TruncSeries] = {}
        for (i1, j1), s1 in self.terms.items():
            for (i2, j2), s2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                prod = s1 * s2
                out[k] = out[k] + prod if k in out else prod
        return ParamPoly(out, order)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ParamPoly":
        if n < 0:
            raise ValueError("negative powers are not polynomial")
        result = ParamPoly.from_poly(Poly.const(1), self.order)
        for _ in range(n):
            result = result * self
        return result

    def diff(self, var: str) -> "ParamPoly":
        k = 0 if var == "x" else 1
        if var not in ("x", "y"):
            raise ValueError(f"unknown variable {var!r}")
        out = {}
        for m, s in self.terms.items():
            e = m[k]
            if e:
                nm = (m[0] - 1, m[1]) if k == 0 else (m[0], m[1] - 1)
                out[nm] = s * e
        return ParamPoly(out, self.order)

    def scale_series(self, s: TruncSeries) -> "ParamPoly":
        return ParamPoly({m: v * s for m, v in self.terms.items()}, self.order)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        keys = set(self.terms) | set(other.terms)
        zero = TruncSeries.const(0, self.order)
        return all(self.terms.get(m, zero).coeffs == other.terms.get(m, zero).coeffs for m in keys)

    def __hash__(self):
        return hash(tuple(sorted((m, s.coeffs) for m, s in self.terms.items())))

    def __str__(self) -> str:
        ks = range(self.order + 1)
        parts = []
        for k in ks:
            c = self.coefficient(k)
            if not c.is_zero():
                parts.append(f"({c})" + ("" if k == 0 else f"*t^{k}"))
        tail = "" if self.exact else f" + O(t^{self.order + 1})"
        return (" + ".join(parts) or "0") + tail

    __repr__ = __str__


def _reorder(s: TruncSeries, order: int) -> TruncSeries:
    if s.order > order:
        return s.truncate(order)
    if s.exact:
        return TruncSeries(s.coeffs, order)
    raise InconclusiveTruncation(f"series known to order {s.order} cannot be extended to {order}")


def parse_param_poly(text: str, param: str = "t", order: int = DEFAULT_ORDER) -> ParamPoly:
    """Parse a family expression in x, y, the parameter and ``sqrt(series)``."""
    if param in ("x", "y", "sqrt"):
        raise ValueError(f"invalid parameter name {param!r}")
    ast = parse_ast(text, ("x", "y", param), allow_sqrt=True)
    base = {
        "x": ParamPoly.from_poly(X, order),
        "y": ParamPoly.from_poly(Y, order),
        param: ParamPoly.from_series(TruncSeries.param(order)),
    }

    def sqrt(v: ParamPoly) -> ParamPoly:
        if any(m != (0, 0) for m, s in v.terms.items() if not s.is_zero()):
            raise ValueError("sqrt(...) may only contain the parameter")
        s = v.terms.get((0, 0), TruncSeries.const(0, order))
        return ParamPoly.from_series(s.sqrt())

    def const(c: Fraction) -> ParamPoly:
        return ParamPoly.from_poly(Poly.const(c), order)

    return evaluate_ast(ast, base.__getitem__, const, sqrt)


@dataclass(frozen=True)
class ParamVectorField:
    a: ParamPoly
    b: ParamPoly

    @property
    def order(self) -> int:
        return min(self.a.order, self.b.order)

    @property
    def d(self) -> int:
        return max(self.a.degree, self.b.degree)

    def at_zero(self) -> VectorField:
        return VectorField(self.a.limit(), self.b.limit())

    def specialize(self, t0) -> VectorField:
        return VectorField(self.a.specialize(t0), self.b.specialize(t0))


def param_derive(field: ParamVectorField, f: ParamPoly) -> ParamPoly:
    return field.a * f.diff("x") + field.b * f.diff("y")


def param_divide(p: ParamPoly, q: ParamPoly) -> Optional[ParamPoly]:
    """``p / q`` over Q[[t]] solved order by order; needs ``q`` nonzero at t = 0.

    At order k the unknown coefficient satisfies
    ``Q_0 L_k = P_k - sum_{i<k} L_i Q_{k-i}``, an exact division in Q[x, y].
    """
    order = min(p.order, q.order)
    q0 = q.limit()
    if q0.is_zero():
        raise ValueError("divisor vanishes at t = 0")
    qs = [q.coefficient(k) for k in range(order + 1)]
    ls: List[Poly] = []
    for k in range(order + 1):
        rhs = p.coefficient(k)
        for i in range(k):
            if not qs[k - i].is_zero() and not ls[i].is_zero():
                rhs = rhs - ls[i] * qs[k - i]
        lk = exact_divide(rhs, q0)
        if lk is None:
            return None
        ls.append(lk)
    result = ParamPoly.from_t_polys(ls, order)
    exact = p.exact and q.exact and (result * q) == p and _degree_in_t(result) + _degree_in_t(q) <= order
    if not exact:
        for s in result.terms.values():
            s.exact = False
    return result


def _degree_in_t(p: ParamPoly) -> int:
    tops = [s._top() for s in p.terms.values()]
    return max(tops) if tops else -1


def param_cofactor(field: ParamVectorField, f: ParamPoly) -> Optional[ParamPoly]:
    """Series cofactor ``X_t(f_t) / f_t`` to the truncation order, or None."""
    return param_divide(param_derive(field, f), f)


def limit_at_zero(f: ParamPoly) -> Poly:
    return f.limit()


@dataclass(frozen=True)
class CurveDerivative:
    r: int
    g: Poly
    margin: int
    scale: Fraction = Fraction(1)


def curve_derivative(f1: ParamPoly, f2: ParamPoly) -> CurveDerivative:
    """First nonzero coefficient of ``f2 - f1`` in t.

    If the limits agree only up to a constant c, ``f2`` is divided by c first
    and c is reported as ``scale``.
    """
    l1, l2 = f1.limit(), f2.limit()
    if l1.is_zero() or l2.is_zero():
        raise ValueError("families must have a nonzero limit at t = 0")
    c1, u1 = canonical_form(l1)
    c2, u2 = canonical_form(l2)
    if c1 != c2:
        raise ValueError("families do not converge to the same curve")
    scale = Fraction(u2) / Fraction(u1)
    if scale != 1:
        f2 = f2 * Poly.const(1 / scale)
    diff = f2 - f1
    order = diff.order
    r = diff.valuation
    if r is None:
        if f1.exact and f2.exact:
            raise IdenticalFamiliesError("the two families coincide")
        raise InconclusiveTruncation(f"difference vanishes to order {order}; raise the order")
    if r >= order:
        raise InconclusiveTruncation(f"vanishing order {r} leaves no margin at order {order}")
    return CurveDerivative(r, diff.coefficient(r), order - r, scale)


def cofactor_expansion_check(field: ParamVectorField, f1: ParamPoly, f2: ParamPoly,
                             r: int) -> Tuple[Poly, bool]:
    """``L2 = L1 + t^r L + O(t^{r+1})``: returns L and whether the expansion holds.

    ``ok`` means the orders below r cancel and ``deg L <= d - 1``.  L itself
    may vanish (exp(g/f) can have cofactor zero).
    """
    if r < 1:
        raise ValueError("the vanishing order r must be positive")
    if f1 == f2:
        raise IdenticalFamiliesError("the two families coincide")
    l1 = param_cofactor(field, f1)
    l2 = param_cofactor(field, f2)
    if l1 is None or l2 is None:
        raise NotInvariantError("a family is not invariant to the truncation order")
    diff = l2 - l1
    if r >= diff.order:
        raise InconclusiveTruncation(f"order {r} is beyond the truncation {diff.order}")
    ok = all(diff.coefficient(k).is_zero() for k in range(r))
    lr = diff.coefficient(r)
    ok = ok and lr.degree <= field.d - 1
    return lr, ok


def derivative_to_exponential(field: VectorField, f: Poly, dv: CurveDerivative) -> ExponentialFactor:
    """Verify that ``exp(g/f)`` is an exponential factor for a derivative g of f."""
    le = exponential_cofactor(field, f, dv.g)
    if le is None:
        raise NotInvariantError(f"derivative {dv.g} of {f} did not yield an exponential factor")
    return ExponentialFactor(dv.g, f, le)


# -- Christopher's construction ---------------------------------------------------


def _jac_terms(f: Poly, g: Poly) -> Tuple[Poly, Poly]:
    # (g_x f - g f_x, g_y f - g f_y)
    return g.diff("x") * f - g * f.diff("x"), g.diff("y") * f - g * f.diff("y")


def christopher_field(f: Poly, g: Poly, a0: Poly, a1: Poly, a2: Poly, a3: Poly) -> VectorField:
    """``(a0 f^2 - a1 f f_y - a2 (g_y f - g f_y)) d/dx + (a3 f^2 + a1 f f_x + a2 (g_x f - g f_x)) d/dy``."""
    if f.is_constant():
        raise ValueError("f must be non-constant")
    jx, jy = _jac_terms(f, g)
    p = a0 * f * f - a1 * f * f.diff("y") - a2 * jy
    q = a3 * f * f + a1 * f * f.diff("x") + a2 * jx
    if p.is_zero() and q.is_zero():
        raise ValueError("the construction produced the zero field")
    field = VectorField(p, q)
    if cofactor(field, f) is None:
        raise AssertionError("f is not invariant for the constructed field")
    return field


def christopher_family(f: Poly, g: Poly, a0: Poly, a1: Poly, a2: Poly, a3: Poly,
                       order: int = DEFAULT_ORDER) -> ParamVectorField:
    """Family with invariant curves f and f + eps*g, after cancelling the 1/eps terms."""
    if f.is_constant():
        raise ValueError("f must be non-constant")
    jx, jy = _jac_terms(f, g)
    # p_eps = a0 f (f + eps g) - a1 f (f + eps g)_y - a2 (g_y f - g f_y)
    p0 = a0 * f * f - a1 * f * f.diff("y") - a2 * jy
    p1 = a0 * f * g - a1 * f * g.diff("y")
    q0 = a3 * f * f + a1 * f * f.diff("x") + a2 * jx
    q1 = a3 * f * g + a1 * f * g.diff("x")
    return ParamVectorField(ParamPoly.from_t_polys([p0, p1], order),
                            ParamPoly.from_t_polys([q0, q1], order))


# -- geometric multiplicity witnesses ------------------------------------------------


@dataclass
class WitnessResult:
    count: int
    accepted: List[int] = dc_field(default_factory=list)
    excluded: List[Tuple[int, str]] = dc_field(default_factory=list)
    limit_scales: Dict[int, Fraction] = dc_field(default_factory=dict)


_SAMPLES = (Fraction(1, 7), Fraction(2, 11), Fraction(3, 13))


def _proportional(f1: ParamPoly, f2: ParamPoly) -> bool:
    q = param_divide(f2, f1)
    return q is not None and all(m == (0, 0) for m, s in q.terms.items() if not s.is_zero())


def _distinct(f1: ParamPoly, f2: ParamPoly) -> bool:
    if _proportional(f1, f2):
        return False
    for t0 in _SAMPLES:
        p1, p2 = f1.specialize(t0), f2.specialize(t0)
        if p1.is_zero() or p2.is_zero():
            continue
        if gcd(p1, p2).is_constant():
            return True
    return False


def geometric_lower_bound_witness(field: ParamVectorField, families: Sequence[ParamPoly], l: int,
                                  target: Optional[Poly] = None) -> WitnessResult:
    """Count families certifying ``mu_{g,l}(X_0, f) >= count``.

    A family counts when it has degree <= l, is invariant for the field to
    the truncation order, converges to the target up to a constant, and has
    no common factor with the families already counted.
    """
    result = WitnessResult(0)
    target_c = canonical_form(target)[0] if target is not None else None
    accepted: List[ParamPoly] = []
    for idx, fam in enumerate(families):
        if fam.degree > l:
            result.excluded.append((idx, f"degree {fam.degree} exceeds {l}"))
            continue
        lim = fam.limit()
        if lim.is_zero() or lim.is_constant():
            result.excluded.append((idx, "limit at t = 0 is constant"))
            continue
        lim_c, u = canonical_form(lim)
        if target_c is None:
            target_c = lim_c
        if lim_c != target_c:
            result.excluded.append((idx, f"limit {lim} does not match the target curve"))
            continue
        if param_cofactor(field, fam) is None:
            result.excluded.append((idx, "not invariant to the truncation order"))
            continue
        if not all(_distinct(prev, fam) for prev in accepted):
            result.excluded.append((idx, "shares a factor with an accepted family"))
            continue
        accepted.append(fam)
        result.accepted.append(idx)
        result.limit_scales[idx] = Fraction(u)
    result.count = len(accepted)
    return result
