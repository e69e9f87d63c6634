"""Planar polynomial vector fields ``a d/dx + b d/dy``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .polyring import Poly, X, Y, ZERO, exact_divide

__all__ = ["VectorField", "InfinityData", "make_vector_field", "derive", "divergence", "infinity_data"]


@dataclass(frozen=True)
class VectorField:
    a: Poly
    b: Poly

    def __post_init__(self):
        if self.a.is_zero() and self.b.is_zero():
            raise ValueError("the zero vector field is not allowed")

    @property
    def d(self) -> int:
        """Affine degree: the larger of deg a and deg b."""
        return max(self.a.degree, self.b.degree)

    def __call__(self, f: Poly) -> Poly:
        return derive(self, f)

    def __str__(self) -> str:
        return f"({self.a}) d/dx + ({self.b}) d/dy"


@dataclass(frozen=True)
class InfinityData:
    invariant: bool
    a_top: Poly
    b_top: Poly
    h: Optional[Poly] = None


def make_vector_field(a: Poly, b: Poly) -> VectorField:
    return VectorField(a, b)


def derive(field: VectorField, f: Poly, k: int = 1) -> Poly:
    """Apply the derivation ``k`` times: ``X^k(f)``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    for _ in range(k):
        if f.is_zero():
            break
        f = field.a * f.diff("x") + field.b * f.diff("y")
    return f


def iterated_derivatives(field: VectorField, f: Poly, k_max: int) -> list[Poly]:
    """``[f, X(f), ..., X^k_max(f)]``."""
    out = [f]
    for _ in range(k_max):
        out.append(derive(field, out[-1]))
    return out


def divergence(field: VectorField) -> Poly:
    return field.a.diff("x") + field.b.diff("y")


def infinity_data(field: VectorField) -> InfinityData:
    """Top-degree parts and the invariance test ``x*b_d - y*a_d != 0``.

    When the test fails, ``h = a_d / x = b_d / y`` is returned as well.
    """
    d = field.d
    a_top = field.a.homogeneous_part(d)
    b_top = field.b.homogeneous_part(d)
    if not (X * b_top - Y * a_top).is_zero():
        return InfinityData(True, a_top, b_top)
    h = exact_divide(a_top, X) if not a_top.is_zero() else exact_divide(b_top, Y)
    assert h is not None
    return InfinityData(False, a_top, b_top, h)
