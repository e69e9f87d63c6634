from fractions import Fraction

import pytest

from darbouxkit.cofactorspace import (
    CofactorSubspace,
    NotSingularError,
    admissible_cofactor_space,
    gamma_space,
    independent_points_check,
    minimalize,
    rational_singular_points,
    restricted_cofactor_space,
    resultant_x,
    taylor_monomial_ideal,
)
from darbouxkit.polyring import ONE, X, Y, Poly, monomials_up_to

from helpers import P, lineconic, field


def brute_force_support(f, p, cap):
    """Monomials (centered at p) occurring in some u*a + v*b, up to degree cap."""
    seen = set()
    for g in (f.a.translate(p), f.b.translate(p)):
        for i, j in monomials_up_to(cap):
            seen |= {m for m in (Poly.monomial(i, j) * g).terms if sum(m) <= cap}
    return seen


@pytest.mark.parametrize("a,b,p,gens", [
    ("x^2", "y", (0, 0), {(0, 1), (2, 0)}),
    ("x", "y", (0, 0), {(1, 0), (0, 1)}),
    ("x^2", "x*y", (0, 0), {(2, 0), (1, 1)}),
    ("x^2 - 2*x + 1 + y", "(y)*(x - 1)", (1, 0), {(2, 0), (0, 1)}),
])
def test_taylor_ideal(a, b, p, gens):
    f = field(a, b)
    ideal = taylor_monomial_ideal(f, p)
    assert set(ideal.generators) == gens
    cap = 4
    inside = {m for m in monomials_up_to(cap) if ideal.contains(m)}
    assert inside == brute_force_support(f, p, cap)


def test_minimalize():
    assert set(minimalize([(1, 0), (2, 0), (1, 1), (0, 3)])) == {(1, 0), (0, 3)}


def test_admissible_space():
    s = admissible_cofactor_space(field("x^2", "y"), (0, 0))
    assert s.dim == 1 and s.basis == [Y]
    assert admissible_cofactor_space(field("x", "y"), (0, 0)).dim == 0
    with pytest.raises(NotSingularError):
        admissible_cofactor_space(field("x", "y"), (1, 0))


def test_admissible_space_is_translated_back():
    s = admissible_cofactor_space(field("(x-1)^2", "y - 2"), (1, 2))
    assert s.dim == 1 and s.contains(P("y - 2"))


def test_gamma():
    assert gamma_space(lineconic(0, 1, 2)).dim == 3
    g = gamma_space(field("x^2", "x*y"))
    assert g.dim == 2 and g.contains(X) and g.contains(ONE) and not g.contains(Y)
    assert gamma_space(field("-x", "y")).dim == 1


def test_restricted_space():
    f = field("x^2", "y")
    assert restricted_cofactor_space(f, []) == gamma_space(f)
    s = restricted_cofactor_space(f, [(0, 0)])
    assert s.dim <= 1
    D = lineconic(0, 1, 2)
    pts = rational_singular_points(D)
    assert pts == [(0, Fraction(-1, 2)), (0, 0)]
    assert restricted_cofactor_space(D, pts).basis == [X]


def test_intersection():
    a = CofactorSubspace(1, [X, Y])
    b = CofactorSubspace(1, [X + Y, ONE])
    assert a.intersect(b) == CofactorSubspace(1, [X + Y])
    with pytest.raises(ValueError):
        a.intersect(CofactorSubspace(2, [X]))


def test_independent_points():
    assert independent_points_check([(0, 0), (1, 0), (0, 1)], 2)
    assert not independent_points_check([(0, 0), (1, 0), (0, 1), (1, 1)], 2)
    assert not independent_points_check([(0, 0), (1, 1), (2, 2)], 2)
    with pytest.raises(ValueError):
        independent_points_check([(0, 0), (0, 0)], 2)


def test_resultant():
    r = resultant_x(P("x^2 + y^2 - 1"), P("x - y"))
    assert r == P("2*y^2 - 1")
