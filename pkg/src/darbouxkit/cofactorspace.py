"""Admissible cofactor spaces from singular points and the line at infinity.

All subspaces live in the space of polynomials of degree <= d-1 and are
stored as bases in reduced row echelon form over the graded-lex monomial
coordinates, so two equal subspaces have identical bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .linalg import det_bareiss, nullspace, rank, rref
from .polyring import ONE, ZERO, Monomial, Point, Poly, as_rational, gcd, grlex_key, monomials_up_to
from .vfield import VectorField, infinity_data

__all__ = [
    "NotSingularError",
    "MonomialIdeal",
    "CofactorSubspace",
    "is_singular",
    "taylor_monomial_ideal",
    "admissible_cofactor_space",
    "gamma_space",
    "restricted_cofactor_space",
    "independent_points_check",
    "rational_singular_points",
]


class NotSingularError(ValueError):
    pass


@dataclass(frozen=True)
class MonomialIdeal:
    generators: Tuple[Monomial, ...]

    def contains(self, m: Monomial) -> bool:
        return any(m[0] >= g[0] and m[1] >= g[1] for g in self.generators)

    def __str__(self) -> str:
        return "<" + ", ".join(str(Poly.monomial(*g)) for g in self.generators) + ">"


def minimalize(monos: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Drop every monomial divisible by another one in the set."""
    monos = set(monos)
    keep = [m for m in monos
            if not any(o != m and m[0] >= o[0] and m[1] >= o[1] for o in monos)]
    return tuple(sorted(keep, key=grlex_key))


class CofactorSubspace:
    """A subspace of Q_{ambient_degree}[x, y] given by an RREF basis."""

    def __init__(self, ambient_degree: int, polys: Sequence[Poly] = ()):
        self.ambient_degree = ambient_degree
        self.monomials = monomials_up_to(ambient_degree) if ambient_degree >= 0 else []
        index = {m: i for i, m in enumerate(self.monomials)}
        vectors = []
        for p in polys:
            if p.degree > ambient_degree:
                raise ValueError(f"{p} exceeds the ambient degree {ambient_degree}")
            v = [0] * len(self.monomials)
            for m, c in p.terms.items():
                v[index[m]] = c
            vectors.append(v)
        red, _ = rref(vectors) if vectors else ([], [])
        self._rows = red
        self.basis = [self._to_poly(r) for r in red]

    def _to_poly(self, vec) -> Poly:
        return Poly({m: c for m, c in zip(self.monomials, vec) if c})

    def vector(self, p: Poly) -> list:
        if p.degree > self.ambient_degree:
            raise ValueError("polynomial exceeds the ambient degree")
        return [p.coeff(m) for m in self.monomials]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, p: Poly) -> bool:
        if p.degree > self.ambient_degree:
            return False
        return rank(self._rows + [self.vector(p)]) == self.dim

    def intersect(self, other: "CofactorSubspace") -> "CofactorSubspace":
        if other.ambient_degree != self.ambient_degree:
            raise ValueError("ambient degrees differ")
        if not self._rows or not other._rows:
            return CofactorSubspace(self.ambient_degree)
        # solve sum(alpha_i u_i) = sum(beta_j v_j)
        k1 = len(self._rows)
        cols = self._rows + [[-c for c in r] for r in other._rows]
        system = [list(col) for col in zip(*cols)]
        kernel = nullspace(system, len(cols))
        polys = []
        for v in kernel:
            vec = [sum(Fraction(v[i]) * self._rows[i][c] for i in range(k1))
                   for c in range(len(self.monomials))]
            polys.append(self._to_poly(vec))
        return CofactorSubspace(self.ambient_degree, polys)

    def __eq__(self, other) -> bool:
        return (isinstance(other, CofactorSubspace) and self.ambient_degree == other.ambient_degree
                and self.basis == other.basis)

    def __repr__(self) -> str:
        return f"CofactorSubspace(deg<={self.ambient_degree}, basis={[str(b) for b in self.basis]})"


def _point(p) -> Point:
    return (as_rational(p[0]), as_rational(p[1]))


def is_singular(field: VectorField, point) -> bool:
    p = _point(point)
    return field.a.evaluate(p) == 0 and field.b.evaluate(p) == 0


def _require_singular(field: VectorField, point) -> Point:
    p = _point(point)
    if not is_singular(field, p):
        raise NotSingularError(f"{p} is not a singular point of the field")
    return p


def taylor_monomial_ideal(field: VectorField, point) -> MonomialIdeal:
    """Monomial ideal of centered monomials occurring in Taylor expansions of <a, b>.

    A centered monomial occurs in some u*a + v*b iff it is divisible by a
    support monomial of the translated a or b, so the translated supports
    generate the ideal.
    """
    p = _require_singular(field, point)
    support = set(field.a.translate(p).terms) | set(field.b.translate(p).terms)
    return MonomialIdeal(minimalize(support))


def admissible_cofactor_space(field: VectorField, point) -> CofactorSubspace:
    """Span of Taylor-ideal monomials of degree <= d-1, in standard coordinates."""
    p = _require_singular(field, point)
    ideal = taylor_monomial_ideal(field, p)
    back = (-p[0], -p[1])
    top = field.d - 1
    polys = [Poly.monomial(*m).translate(back) for m in monomials_up_to(top) if ideal.contains(m)]
    return CofactorSubspace(top, polys)


def gamma_space(field: VectorField) -> CofactorSubspace:
    d = field.d
    info = infinity_data(field)
    if info.invariant:
        return CofactorSubspace(d - 1, [Poly.monomial(*m) for m in monomials_up_to(d - 1)])
    polys = [Poly.monomial(*m) for m in monomials_up_to(d - 2)] + [info.h]
    return CofactorSubspace(d - 1, polys)


def restricted_cofactor_space(field: VectorField, points: Sequence) -> CofactorSubspace:
    space = gamma_space(field)
    for p in points:
        space = space.intersect(admissible_cofactor_space(field, p))
    return space


def independent_points_check(points: Sequence, d: int) -> bool:
    """Whether the points impose independent conditions on Q_{d-1}[x, y]."""
    pts = [_point(p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    monos = monomials_up_to(d - 1)
    if len(pts) > len(monos):
        return False
    matrix = [[Poly.monomial(*m).evaluate(p) for m in monos] for p in pts]
    return rank(matrix) == len(pts)


# -- rational singular points ------------------------------------------------------


def _specialize_y(p: Poly, y0) -> Poly:
    out = {}
    for (i, j), c in p.terms.items():
        out[(i, 0)] = out.get((i, 0), 0) + c * Fraction(y0) ** j
    return Poly(out)


def _swap(p: Poly) -> Poly:
    return Poly({(j, i): c for (i, j), c in p.terms.items()})


def _x_coefficients(p: Poly) -> List[Poly]:
    deg = p.degree_in("x")
    out = [ZERO] * (deg + 1)
    for (i, j), c in p.terms.items():
        out[i] = out[i] + Poly.monomial(0, j, c)
    return out


def resultant_x(p: Poly, q: Poly) -> Poly:
    """Sylvester resultant eliminating x; a polynomial in y."""
    cp, cq = _x_coefficients(p), _x_coefficients(q)
    m, n = len(cp) - 1, len(cq) - 1
    if m == 0:
        return cp[0] ** n
    if n == 0:
        return cq[0] ** m
    size = m + n
    rows = []
    for i in range(n):
        row = [ZERO] * size
        for k, c in enumerate(reversed(cp)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [ZERO] * size
        for k, c in enumerate(reversed(cq)):
            row[i + k] = c
        rows.append(row)
    return det_bareiss(rows)


def _rational_roots_x(p: Poly) -> List[Fraction]:
    # roots of a univariate polynomial in x; delegates integer factoring to sympy
    import sympy

    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    deg = p.degree_in("x")
    coeffs = [Fraction(p.coeff((i, 0))) for i in range(deg, -1, -1)]
    sp = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in coeffs], sympy.Symbol("v"))
    return sorted(Fraction(int(r.p), int(r.q)) for r in sp.ground_roots())


def rational_singular_points(field: VectorField) -> List[Point]:
    """All singular points with rational coordinates (finitely many required)."""
    a, b = field.a, field.b
    if a.is_zero() or b.is_zero() or not gcd(a, b).is_constant():
        raise ValueError("a and b share a common factor: singular set is not finite")
    res = resultant_x(a, b)
    ys = _rational_roots_x(_swap(res)) if not res.is_constant() else []
    points = []
    for y0 in ys:
        ax, bx = _specialize_y(a, y0), _specialize_y(b, y0)
        common = gcd(ax, bx) if not (ax.is_zero() and bx.is_zero()) else None
        if common is None:
            raise ValueError("infinitely many singular points on a horizontal line")
        if common.is_constant():
            continue
        for x0 in _rational_roots_x(common):
            points.append((_n(x0), _n(y0)))
    return sorted(set(points))


def _n(c: Fraction):
    return c.numerator if c.denominator == 1 else c
