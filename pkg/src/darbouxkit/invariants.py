"""Invariant curves, exponential factors and their multiplicities."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import List, Optional, Sequence, Tuple

from .extactic import default_generator_indices, extactic_curve, extactic_ideal_generator
from .linalg import coordinates, rank
from .polyring import (
    ONE,
    ZERO,
    Poly,
    exact_divide,
    factor_multiplicity,
    gcd,
    poly_sum,
    radical,
)
from .vfield import VectorField, derive, infinity_data

__all__ = [
    "NotInvariantError",
    "RationalFirstIntegralRegime",
    "InvariantCurve",
    "ExponentialFactor",
    "StrongMultCertificate",
    "StrongMultReport",
    "cofactor",
    "invariant_curve",
    "product_cofactor_check",
    "exponential_cofactor",
    "exponential_factor",
    "algebraic_multiplicity",
    "strong_multiplicity_certify",
    "exp_coefficient_space_dim",
    "integrable_multiplicity_lower_bound",
    "validate_cofactor_at_infinity",
]


class NotInvariantError(ValueError):
    """A curve claimed invariant is not."""


class RationalFirstIntegralRegime(ArithmeticError):
    """E_l(X) vanishes identically, so multiplicities are undefined."""


@dataclass(frozen=True)
class InvariantCurve:
    f: Poly
    cofactor: Poly


@dataclass(frozen=True)
class ExponentialFactor:
    g: Poly
    f: Poly
    cofactor: Poly

    def coefficient_text(self) -> str:
        return f"({self.g})/({self.f})"


def cofactor(field: VectorField, f: Poly) -> Optional[Poly]:
    """``X(f)/f`` when it is a polynomial, else None."""
    if f.is_constant():
        raise ValueError("invariance of a constant is meaningless")
    lf = exact_divide(derive(field, f), f)
    if lf is not None:
        assert lf.degree <= field.d - 1, "cofactor degree exceeds d-1"
    return lf


def invariant_curve(field: VectorField, f: Poly) -> InvariantCurve:
    lf = cofactor(field, f)
    if lf is None:
        raise NotInvariantError(f"{f} is not invariant")
    return InvariantCurve(f, lf)


def product_cofactor_check(field: VectorField, factors: Sequence[Tuple[Poly, int]]) -> bool:
    """Cofactor of a product equals the multiplicity-weighted sum of cofactors."""
    total = ZERO
    product = ONE
    for f, k in factors:
        lf = cofactor(field, f)
        if lf is None:
            raise NotInvariantError(f"factor {f} is not invariant")
        total = total + lf.scale(k)
        product = product * f**k
    lp = cofactor(field, product)
    return lp is not None and lp == total


def exponential_cofactor(field: VectorField, f: Poly, g: Poly) -> Optional[Poly]:
    """Cofactor of ``exp(g/f)``: ``(X(g) - g L_f) / f`` when polynomial of degree <= d-1."""
    lf = cofactor(field, f)
    if lf is None:
        raise NotInvariantError(f"denominator {f} is not invariant")
    le = exact_divide(derive(field, g) - g * lf, f)
    if le is None or le.degree > field.d - 1:
        return None
    return le


def exponential_factor(field: VectorField, f: Poly, g: Poly) -> ExponentialFactor:
    le = exponential_cofactor(field, f, g)
    if le is None:
        raise NotInvariantError(f"exp(({g})/({f})) is not an exponential factor")
    return ExponentialFactor(g, f, le)


def algebraic_multiplicity(field: VectorField, f: Poly, l: int,
                           extactic: Optional[Poly] = None) -> int:
    """Largest m with ``f**m`` dividing E_l(X); 0 when deg f > l."""
    if f.is_constant():
        raise ValueError("f must be non-constant")
    if f.degree > l:
        return 0
    e = extactic if extactic is not None else extactic_curve(field, l)
    if e.is_zero():
        raise RationalFirstIntegralRegime(
            f"E_{l} vanishes identically: the field has a rational first integral"
        )
    return factor_multiplicity(e, f)


# -- strong algebraic multiplicity ---------------------------------------------


@dataclass(frozen=True)
class StrongMultCertificate:
    """``unit * f**m == sum(h * sigma_idx)`` with ``gcd(unit, f) = 1``.

    The unit is invertible in the local ring along every component of f, so
    the identity places ``f**m`` in the extactic ideal localized along f.
    """

    m: int
    combiners: Tuple[Tuple[Tuple[int, ...], Poly], ...]
    unit: Poly
    cap: int

    def verify(self, field: VectorField, f: Poly, n: int) -> bool:
        lhs = self.unit * f**self.m
        rhs = poly_sum(h * extactic_ideal_generator(field, n, idx) for idx, h in self.combiners)
        if lhs != rhs or lhs.is_zero():
            return False
        if any(h.degree > self.cap for _, h in self.combiners):
            return False
        return gcd(self.unit, f).is_constant()


@dataclass
class StrongMultReport:
    certificate: Optional[StrongMultCertificate]
    lines: List[str] = dc_field(default_factory=list)
    valuations: dict = dc_field(default_factory=dict)

    @property
    def inconclusive(self) -> bool:
        return self.certificate is None


def strong_multiplicity_certify(
    field: VectorField,
    f: Poly,
    l: int,
    m_max: int,
    cap: Optional[int] = None,
    generators: Optional[Sequence[Sequence[int]]] = None,
) -> StrongMultReport:
    """Search m = 1..m_max for a local membership certificate of ``f**m``.

    Each generator sigma is split as ``s**k * w`` with ``s`` the square-free
    part of f.  When ``gcd(w, s) = 1`` every prime factor of f divides sigma
    exactly k times, and ``k <= m * e`` (``s**e | f``) yields the explicit
    certificate ``w * f**m = (s**(m*e - k) * f**m / s**(m*e)) * sigma``.
    A failure is inconclusive, never a proof of non-membership.
    """
    if f.is_constant():
        raise ValueError("f must be non-constant")
    gens = [tuple(g) for g in (generators if generators is not None else default_generator_indices(l))]
    if not gens:
        raise ValueError("empty generator set")
    s = radical(f)
    e = factor_multiplicity(f, s)
    report = StrongMultReport(None)
    usable = []
    deg_el = None
    for idx in gens:
        sigma = extactic_ideal_generator(field, l, idx)
        if sigma.is_zero():
            report.lines.append(f"sigma{idx} = 0, skipped")
            continue
        if deg_el is None and idx == tuple(range(len(idx))):
            deg_el = sigma.degree
        k = factor_multiplicity(sigma, s)
        w = exact_divide(sigma, s**k)
        if not gcd(w, s).is_constant():
            report.lines.append(f"sigma{idx}: valuation differs across components of f, skipped")
            continue
        report.valuations[idx] = k
        usable.append((k, idx, w))
    if deg_el is None:
        deg_el = extactic_curve(field, l).degree
    usable.sort(key=lambda item: item[0])
    for m in range(1, m_max + 1):
        bound = cap if cap is not None else m * f.degree + max(deg_el, 0)
        fm = f**m
        found = None
        for k, idx, w in usable:
            if k > m * e:
                continue
            base = exact_divide(fm, s ** (m * e))
            h = s ** (m * e - k) * base
            if h.degree > bound:
                continue
            found = StrongMultCertificate(m, ((idx, h),), w, bound)
            break
        if found is not None:
            report.certificate = found
            report.lines.append(f"certificate for m={m} via sigma{found.combiners[0][0]}")
            return report
        report.lines.append(f"no certificate for m={m} up to cap {bound}")
    return report


# -- exponential coefficient spaces --------------------------------------------


def exp_coefficient_space_dim(f: Poly, coefficients: Sequence[Tuple[Poly, int]]) -> int:
    """Dimension over Q of the span of the ``g_k / f**k_k``."""
    if not coefficients:
        return 0
    top = max(k for _, k in coefficients)
    polys = [g * f ** (top - k) for g, k in coefficients]
    _, rows = coordinates(polys)
    return rank(rows)


def integrable_multiplicity_lower_bound(f: Poly, coefficients: Sequence[Tuple[Poly, int]]) -> int:
    return exp_coefficient_space_dim(f, coefficients) + 1


# -- line at infinity -----------------------------------------------------------


def validate_cofactor_at_infinity(field: VectorField, cof: Poly, kind: str,
                                  curve_degree: Optional[int] = None) -> bool:
    """Top-degree law for cofactors when infinity is not invariant.

    ``kind='curve'`` checks ``L_{d-1} = deg(f) * h``; ``kind='exponential'``
    checks ``L_{d-1} = 0``.
    """
    info = infinity_data(field)
    if info.invariant:
        raise ValueError("the line at infinity is invariant; the top-part law does not apply")
    top = cof.homogeneous_part(field.d - 1)
    if kind == "curve":
        if curve_degree is None:
            raise ValueError("curve_degree is required for kind='curve'")
        return top == info.h.scale(curve_degree)
    if kind == "exponential":
        return top.is_zero()
    raise ValueError(f"unknown cofactor kind {kind!r}")
