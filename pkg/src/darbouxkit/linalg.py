"""Exact linear algebra over Q and fraction-free determinants over Q[x, y]."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .polyring import ONE, ZERO, Poly, Rational, _content_and_denominator, _norm, exact_divide

Matrix = List[List[Rational]]


def rref(rows: Sequence[Sequence[Rational]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[Fraction(c) for c in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [[_norm(v) for v in row] for row in m[:r]], pivots


def rank(rows: Sequence[Sequence[Rational]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Rational]], ncols: Optional[int] = None) -> Matrix:
    """Basis of the right kernel, one vector per free column (RREF order)."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v: List[Rational] = [0] * ncols
        v[fc] = 1
        for row, pc in zip(red, pivots):
            v[pc] = _norm(-Fraction(row[fc]))
        basis.append(v)
    return basis


def solve_min_norm(rows: Sequence[Sequence[Rational]], rhs: Sequence[Rational]) -> Optional[List[Rational]]:
    """Minimum-Euclidean-norm exact solution of ``A v = rhs``, or None if inconsistent.

    The solution is ``A^T w`` for any ``w`` with ``A A^T w = rhs``; it is unique.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    gram = [[sum(Fraction(a) * b for a, b in zip(rows[i], rows[j])) for j in range(nrows)]
            for i in range(nrows)]
    aug = [gram[i] + [Fraction(rhs[i])] for i in range(nrows)]
    red, pivots = rref(aug)
    if nrows in pivots:
        return None
    w = [Fraction(0)] * nrows
    for row, pc in zip(red, pivots):
        w[pc] = Fraction(row[nrows])
    v = [sum(rows[i][j] * w[i] for i in range(nrows)) for j in range(ncols)]
    # A A^T w = b implies A (A^T w) = b
    return [_norm(Fraction(c)) for c in v]


def primitive_integer_vector(v: Sequence[Rational]) -> List[int]:
    """Scale a nonzero rational vector to coprime integers, first nonzero positive."""
    den = 1
    for c in v:
        den = math.lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in v]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if g == 0:
        return ints
    first = next(c for c in ints if c)
    if first < 0:
        g = -g
    return [c // g for c in ints]


def coordinates(polys: Sequence[Poly]) -> Tuple[List[tuple], Matrix]:
    """Coefficient matrix (one column per polynomial) over the union of supports."""
    from .polyring import grlex_key

    monos = sorted({m for p in polys for m in p.terms}, key=grlex_key, reverse=True)
    rows = [[p.coeff(m) for p in polys] for m in monos]
    return monos, rows


# -- polynomial determinants -----------------------------------------------------


def _clear_row(row: Sequence[Poly]) -> Tuple[List[Poly], Rational]:
    """Scale a row to integer content-free polynomials; returns (row, factor) with
    original = factor * new."""
    den = 1
    g = 0
    for p in row:
        gp, dp = _content_and_denominator(p)
        den = math.lcm(den, dp)
    scaled = [p.scale(den) for p in row]
    for p in scaled:
        for c in p._terms.values():
            g = math.gcd(g, c)
    if g == 0:
        return list(row), 1
    new = [Poly._raw({m: c // g for m, c in p._terms.items()}) for p in scaled]
    return new, _norm(Fraction(g, den))


def det_bareiss(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square polynomial matrix by fraction-free elimination.

    Rows are first scaled to primitive integer form; every Bareiss step then
    divides exactly in Z[x, y].
    """
    n = len(matrix)
    if n == 0:
        return ONE
    if any(len(r) != n for r in matrix):
        raise ValueError("matrix must be square")
    factor: Rational = 1
    m = []
    for row in matrix:
        new, f = _clear_row(row)
        factor = _norm(factor * f)
        m.append(new)
    if n == 1:
        return m[0][0].scale(factor)
    if n == 2:
        return (m[0][0] * m[1][1] - m[0][1] * m[1][0]).scale(factor)
    if n == 3:
        return _det3(m).scale(factor)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            cand = [i for i in range(k + 1, n) if not m[i][k].is_zero()]
            if not cand:
                return ZERO
            best = min(cand, key=lambda i: len(m[i][k]))
            m[k], m[best] = m[best], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = pivot * m[i][j] - mik * m[k][j]
                if k:
                    q = exact_divide(num, prev)
                    if q is None:
                        raise ArithmeticError("Bareiss division was not exact")
                    num = q
                m[i][j] = num
        prev = pivot
    result = m[n - 1][n - 1]
    return result.scale(factor * sign)


def _det3(m) -> Poly:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def det_cofactor(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Laplace expansion along the first row (reference implementation)."""
    n = len(matrix)
    if n == 0:
        return ONE
    if n == 1:
        return matrix[0][0]
    total = ZERO
    for j in range(n):
        if matrix[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
