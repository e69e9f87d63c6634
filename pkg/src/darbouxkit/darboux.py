"""Darboux first integrals and integrating factors from invariant curves."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .invariants import ExponentialFactor, InvariantCurve
from .linalg import coordinates, nullspace, primitive_integer_vector, solve_min_norm
from .polyring import ONE, Poly, Rational, RationalFunction, format_rational, gcd, poly_sum
from .vfield import VectorField, derive, divergence

__all__ = [
    "CertificateKind",
    "IntegrabilityClass",
    "DarbouxCertificate",
    "solve_darboux",
    "integrability_class",
    "verify_rational_first_integral",
    "verify_rational_integrating_factor",
    "associated_integrating_factor",
]


class CertificateKind(enum.Enum):
    FIRST_INTEGRAL = "FirstIntegral"
    INTEGRATING_FACTOR = "IntegratingFactor"


class IntegrabilityClass(enum.Enum):
    RATIONAL_FI = "RationalFI"
    DARBOUXIAN_FI = "DarbouxianFI"
    DARBOUXIAN_FI_OR_IF = "DarbouxianFIorIF"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class DarbouxCertificate:
    kind: CertificateKind
    lambdas: Tuple[Rational, ...]
    rhos: Tuple[Rational, ...]
    expression: str
    kernel: Tuple[Tuple[Rational, ...], ...] = ()

    def combined_cofactor(self, curves: Sequence[InvariantCurve],
                          exps: Sequence[ExponentialFactor]) -> Poly:
        parts = [c.cofactor.scale(l) for c, l in zip(curves, self.lambdas)]
        parts += [e.cofactor.scale(r) for e, r in zip(exps, self.rhos)]
        return poly_sum(parts)

    def verify(self, field: VectorField, curves: Sequence[InvariantCurve],
               exps: Sequence[ExponentialFactor]) -> bool:
        """Re-check the cofactor identity, including that the cofactors are genuine."""
        for c in curves:
            if derive(field, c.f) != c.cofactor * c.f:
                return False
        for e in exps:
            lf = None
            for c in curves:
                if c.f == e.f:
                    lf = c.cofactor
            if lf is None:
                from .invariants import cofactor

                lf = cofactor(field, e.f)
            if lf is None or derive(field, e.g) != e.g * lf + e.f * e.cofactor:
                return False
        if not any(self.lambdas) and not any(self.rhos):
            return False
        total = self.combined_cofactor(curves, exps)
        if self.kind is CertificateKind.FIRST_INTEGRAL:
            return total.is_zero()
        return total == -divergence(field)


def _exponent_text(v: Rational) -> str:
    if isinstance(v, Fraction):
        return f"({format_rational(v)})"
    return str(v)


def _base_text(p: Poly) -> str:
    s = str(p)
    return s if len(p) == 1 and (p.leading_coeff == 1) else f"({s})"


def darboux_expression(curves: Sequence[InvariantCurve], exps: Sequence[ExponentialFactor],
                       lambdas: Sequence[Rational], rhos: Sequence[Rational]) -> str:
    factors = []
    for c, lam in zip(curves, lambdas):
        if lam:
            factors.append(f"{_base_text(c.f)}^{_exponent_text(lam)}")
    for e, rho in zip(exps, rhos):
        if rho:
            factors.append(f"exp({_base_text(e.g)}/{_base_text(e.f)})^{_exponent_text(rho)}")
    return " * ".join(factors) if factors else "1"


def solve_darboux(field: VectorField, curves: Sequence[InvariantCurve],
                  exps: Sequence[ExponentialFactor] = (),
                  kind: Optional[CertificateKind] = None) -> Optional[DarbouxCertificate]:
    """Solve ``sum(lambda_i L_i) + sum(rho_j L_j) = 0`` or ``= -div X`` over Q.

    With ``kind=None`` the homogeneous system is tried first and the
    inhomogeneous one only if its kernel is trivial; pass ``kind`` to ask for
    one system only.  The kernel basis (RREF order) is attached to
    first-integral certificates, whose exponents are the first basis vector
    scaled to coprime integers.  Integrating factors use the minimum-norm
    solution.
    """
    curves, exps = list(curves), list(exps)
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            if not gcd(curves[i].f, curves[j].f).is_constant():
                raise ValueError(f"curves {curves[i].f} and {curves[j].f} share a factor")
    cofs = [c.cofactor for c in curves] + [e.cofactor for e in exps]
    if not cofs:
        return None
    div = divergence(field)
    monos, rows = coordinates(cofs + [div])
    matrix = [row[:-1] for row in rows]
    p = len(curves)
    kernel = nullspace(matrix, len(cofs)) if matrix else [[1 if i == j else 0 for i in range(len(cofs))]
                                                          for j in range(len(cofs))]
    if kernel and kind is not CertificateKind.INTEGRATING_FACTOR:
        vec = primitive_integer_vector(kernel[0])
        lambdas, rhos = tuple(vec[:p]), tuple(vec[p:])
        return DarbouxCertificate(CertificateKind.FIRST_INTEGRAL, lambdas, rhos,
                                  darboux_expression(curves, exps, lambdas, rhos),
                                  tuple(tuple(v) for v in kernel))
    if kind is CertificateKind.FIRST_INTEGRAL:
        return None
    rhs = [-row[-1] for row in rows]
    sol = solve_min_norm(matrix, rhs) if matrix else None
    if sol is None or not any(sol):
        return None
    lambdas, rhos = tuple(sol[:p]), tuple(sol[p:])
    return DarbouxCertificate(CertificateKind.INTEGRATING_FACTOR, lambdas, rhos,
                              darboux_expression(curves, exps, lambdas, rhos))


def integrability_class(mu: int, sigma: int) -> IntegrabilityClass:
    if mu >= sigma + 2:
        return IntegrabilityClass.RATIONAL_FI
    if mu >= sigma + 1:
        return IntegrabilityClass.DARBOUXIAN_FI
    if mu >= sigma:
        return IntegrabilityClass.DARBOUXIAN_FI_OR_IF
    return IntegrabilityClass.UNDETERMINED


def _as_rf(h) -> RationalFunction:
    return h if isinstance(h, RationalFunction) else RationalFunction(h)


def verify_rational_first_integral(field: VectorField, h) -> bool:
    h = _as_rf(h)
    if h.is_constant():
        raise ValueError("a first integral must be non-constant")
    return (derive(field, h.num) * h.den - h.num * derive(field, h.den)).is_zero()


def verify_rational_integrating_factor(field: VectorField, r) -> bool:
    r = _as_rf(r)
    if r.is_zero():
        raise ValueError("the zero function is not an integrating factor")
    n, d = r.num, r.den
    return (derive(field, n) * d - n * derive(field, d) + divergence(field) * n * d).is_zero()


def associated_integrating_factor(field: VectorField, h) -> RationalFunction:
    """The R with ``R a = H_y`` and ``R b = -H_x``."""
    h = _as_rf(h)
    hx, hy = h.diff("x"), h.diff("y")
    a, b = field.a, field.b
    candidates = []
    if not a.is_zero():
        candidates.append(hy / RationalFunction(a))
    if not b.is_zero():
        candidates.append(-hx / RationalFunction(b))
    r = candidates[0]
    consistent = all(c == r for c in candidates[1:])
    if a.is_zero():
        consistent = consistent and hy.is_zero()
    if b.is_zero():
        consistent = consistent and hx.is_zero()
    if not consistent or r.is_zero() or not verify_rational_integrating_factor(field, r):
        raise ValueError("H is not a first integral of the field")
    return r
