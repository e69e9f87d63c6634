"""Extactic curves, extactic-ideal generators and curve-count budgets."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .linalg import det_bareiss
from .polyring import ONE, Monomial, Poly, monomials_up_to
from .vfield import VectorField, infinity_data, iterated_derivatives

__all__ = [
    "ExtacticBasis",
    "extactic_basis",
    "extactic_matrix",
    "extactic_curve",
    "extactic_ideal_generator",
    "default_generator_indices",
    "rational_first_integral_degree",
    "budget",
    "budget_check",
    "degree_bound",
]


@dataclass(frozen=True)
class ExtacticBasis:
    n: int
    monomials: Tuple[Monomial, ...]

    @property
    def size(self) -> int:
        return len(self.monomials)

    def polys(self) -> list[Poly]:
        return [Poly.monomial(i, j) for i, j in self.monomials]


def extactic_basis(n: int) -> ExtacticBasis:
    """All monomials of degree <= n in graded-lex descending order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return ExtacticBasis(n, tuple(monomials_up_to(n)))


def _check_indices(ks: Sequence[int], size: int) -> Tuple[int, ...]:
    ks = tuple(int(k) for k in ks)
    if len(ks) != size:
        raise ValueError(f"generator index needs {size} entries, got {len(ks)}")
    if any(k < 0 for k in ks):
        raise ValueError("generator indices must be non-negative")
    if any(b <= a for a, b in zip(ks, ks[1:])):
        raise ValueError("generator indices must be strictly increasing")
    return ks


def extactic_matrix(field: VectorField, n: int, ks: Optional[Sequence[int]] = None,
                    basis: Optional[Sequence[Poly]] = None) -> list[list[Poly]]:
    """Rows ``X^k(v_1), ..., X^k(v_l)`` for each k in ``ks`` (default 0..l-1)."""
    polys = list(basis) if basis is not None else extactic_basis(n).polys()
    size = len(polys)
    ks = _check_indices(range(size) if ks is None else ks, size)
    columns = [iterated_derivatives(field, v, ks[-1]) for v in polys]
    return [[col[k] for col in columns] for k in ks]


def extactic_curve(field: VectorField, n: int, basis: Optional[Sequence[Poly]] = None) -> Poly:
    """The n-th extactic curve; may be the zero polynomial."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return det_bareiss(extactic_matrix(field, n, basis=basis))


def extactic_ideal_generator(field: VectorField, n: int, ks: Sequence[int]) -> Poly:
    """Determinant with row j equal to ``X^{k_j}`` applied to the basis."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return det_bareiss(extactic_matrix(field, n, ks))


def default_generator_indices(n: int) -> list[Tuple[int, ...]]:
    """``(0, 1, ..., l-2, k)`` for ``k = l-1, ..., l+2``; the first is E_n itself."""
    size = (n + 1) * (n + 2) // 2
    head = tuple(range(size - 1))
    return [head + (k,) for k in range(size - 1, size + 3)]


def rational_first_integral_degree(field: VectorField, n_max: int) -> Optional[int]:
    """Smallest n <= n_max with E_n = 0 and E_{n-1} != 0 (E_0 is taken as 1)."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    prev = ONE
    for n in range(1, n_max + 1):
        cur = extactic_curve(field, n)
        if cur.is_zero() and not prev.is_zero():
            return n
        prev = cur
    return None


def degree_bound(d: int, n: int) -> int:
    """Upper bound ``sum_j (n + j(d-1))`` on deg E_n."""
    size = (n + 1) * (n + 2) // 2
    return sum(n + j * (d - 1) for j in range(size))


def budget_for_degree(d: int, l: int, infinity_invariant: bool) -> int:
    if l < 1:
        raise ValueError("l must be a positive integer")
    base = d * (l**4 + 6 * l**3 + 11 * l**2 + 6 * l)
    if infinity_invariant:
        num = base - l**4 - 2 * l**3 + l**2 - 6 * l
    else:
        num = base - 2 * l**4 - 8 * l**3 - 10 * l**2 - 4 * l
    value = Fraction(num, 8)
    assert value.denominator == 1, "budget formula is integral for all d, l"
    # the non-invariant formula goes negative for d = 1, l >= 2
    return max(int(value), 0)


def budget(field: VectorField, l: int) -> int:
    """Curve-count threshold n_l(X) forcing a rational first integral."""
    return budget_for_degree(field.d, l, infinity_data(field).invariant)


def budget_check(field: VectorField, l: int, weighted_sum: int) -> bool:
    return weighted_sum >= budget(field, l)
