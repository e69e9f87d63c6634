"""Randomized property suites over constructed instances (fixed seeds).

Each ``suite_*`` function checks at least ``n`` valid cases and returns the
count; the tests below and the acceptance suite both call them.
"""

import random

from darbouxkit.cofactorspace import (
    admissible_cofactor_space,
    independent_points_check,
    is_singular,
    restricted_cofactor_space,
)
from darbouxkit.deform import (
    ParamPoly,
    christopher_family,
    christopher_field,
    geometric_lower_bound_witness,
    param_cofactor,
)
from darbouxkit.extactic import extactic_curve
from darbouxkit.invariants import (
    algebraic_multiplicity,
    cofactor,
    exponential_cofactor,
    product_cofactor_check,
    strong_multiplicity_certify,
    validate_cofactor_at_infinity,
)
from darbouxkit.linalg import nullspace
from darbouxkit.polyring import X, Y, Poly, exact_divide, gcd, monomials_up_to, poly_sum
from darbouxkit.series import TruncSeries
from darbouxkit.vfield import VectorField, derive, infinity_data

from helpers import rand_exact_degree, rand_poly, rand_rational

N = 200
MAX_TRIES = 20


def _field(a, b):
    if a.is_zero() and b.is_zero():
        return None
    return VectorField(a, b)


def _nonconstant(rng, deg, **kw):
    return rand_exact_degree(rng, rng.randint(1, deg) if deg > 1 else 1, **kw)


def _vanishing_at(rng, p, deg):
    """Random polynomial of degree <= deg with value 0 at p."""
    if deg < 1:
        return Poly()
    u, v = rand_poly(rng, deg - 1, bound=3), rand_poly(rng, deg - 1, bound=3)
    return (X - p[0]) * u + (Y - p[1]) * v


def field_with_curve(f, g, h1, h2):
    """``(-g f_y + f h1, g f_x + f h2)``: f is invariant with cofactor ``h1 f_x + h2 f_y``."""
    fx, fy = f.diff("x"), f.diff("y")
    return _field(-g * fy + f * h1, g * fx + f * h2)


def _cases(n, seed, draw):
    """Run ``draw(rng)`` until n cases were checked; draw returns False to skip."""
    rng = random.Random(seed)
    done = tries = 0
    while done < n:
        tries += 1
        assert tries <= MAX_TRIES * n, "too many degenerate draws"
        if draw(rng) is not False:
            done += 1
    return done


# -- derivations ---------------------------------------------------------------------


def suite_derive(n=N, seed=1):
    def draw(rng):
        X0 = _field(rand_poly(rng, 3), rand_poly(rng, 3))
        if X0 is None:
            return False
        f, g = rand_poly(rng, 3), rand_poly(rng, 3)
        al, be = rand_rational(rng), rand_rational(rng)
        assert derive(X0, f.scale(al) + g.scale(be)) == derive(X0, f).scale(al) + derive(X0, g).scale(be)
        assert derive(X0, f * g) == f * derive(X0, g) + g * derive(X0, f)
        assert derive(X0, f).degree <= max(f.degree + X0.d - 1, -1)

    return _cases(n, seed, draw)


# -- invariant curves divide extactic curves --------------------------------------------


def suite_pext(n=N, seed=2):
    def draw(rng):
        quadratic = rng.random() < 0.1
        if quadratic:
            f = rand_exact_degree(rng, 2, bound=3)
            g, h1, h2 = rand_poly(rng, 1, bound=3), rand_poly(rng, 0), rand_poly(rng, 0)
        else:
            f = rand_exact_degree(rng, 1)
            g, h1, h2 = rand_poly(rng, 2), rand_poly(rng, 1), rand_poly(rng, 1)
        X0 = field_with_curve(f, g, h1, h2)
        if X0 is None:
            return False
        assert cofactor(X0, f) is not None
        e = extactic_curve(X0, f.degree)
        assert exact_divide(e, f) is not None

    return _cases(n, seed, draw)


def suite_propfactor(n=N, seed=3):
    def draw(rng):
        f1, f2 = rand_exact_degree(rng, 1), _nonconstant(rng, 2, bound=3)
        if not gcd(f1, f2).is_constant():
            return False
        X0 = field_with_curve(f1 * f2, rand_poly(rng, 1), rand_poly(rng, 1), rand_poly(rng, 1))
        if X0 is None:
            return False
        k1, k2 = rng.randint(1, 3), rng.randint(1, 3)
        assert product_cofactor_check(X0, [(f1, k1), (f2, k2)])
        lf = cofactor(X0, f1**k1 * f2**k2)
        assert lf == cofactor(X0, f1).scale(k1) + cofactor(X0, f2).scale(k2)

    return _cases(n, seed, draw)


# -- cofactors at singular points ----------------------------------------------------------


def _point(rng):
    return (rng.randint(-2, 2), rng.randint(-2, 2))


def suite_aaa(n=N, seed=4):
    def draw(rng):
        p = _point(rng)
        f = _nonconstant(rng, 2, bound=3)
        if f.evaluate(p) == 0:
            return False
        g = _vanishing_at(rng, p, rng.randint(1, 2))
        h1, h2 = _vanishing_at(rng, p, 1), _vanishing_at(rng, p, 1)
        X0 = field_with_curve(f, g, h1, h2)
        if X0 is None:
            return False
        assert is_singular(X0, p)
        lf = cofactor(X0, f)
        assert admissible_cofactor_space(X0, p).contains(lf)

    return _cases(n, seed, draw)


def suite_ccc(n=N, seed=5):
    def draw(rng):
        p = _point(rng)
        f = _nonconstant(rng, 2, bound=3)
        if f.evaluate(p) == 0:
            return False
        g = rand_poly(rng, f.degree, bound=3)
        a = [_vanishing_at(rng, p, 1) for _ in range(4)]
        try:
            X0 = christopher_field(f, g, *a)
        except ValueError:
            return False
        le = exponential_cofactor(X0, f, g)
        if le is None:
            return False
        assert is_singular(X0, p)
        assert admissible_cofactor_space(X0, p).contains(le)

    return _cases(n, seed, draw)


# -- top-degree laws when infinity is not invariant -----------------------------------------


def suite_bbb(n=N, seed=6):
    def draw(rng):
        h = rand_exact_degree(rng, rng.randint(0, 1), bound=3)
        f = _nonconstant(rng, 2, bound=3)
        if rng.random() < 0.5:
            # f * (h*x + lower, h*y + lower) + k * (-f_y, f_x)
            ya = h * X + rand_poly(rng, h.degree, bound=3)
            yb = h * Y + rand_poly(rng, h.degree, bound=3)
            k = rand_poly(rng, h.degree + 1, bound=3)
            X0 = _field(f * ya - k * f.diff("y"), f * yb + k * f.diff("x"))
            info = infinity_data(X0)
            assert not info.invariant
            lf = cofactor(X0, f)
            assert validate_cofactor_at_infinity(X0, lf, "curve", f.degree)
            assert lf.homogeneous_part(X0.d - 1) == info.h.scale(f.degree)
        else:
            g = rand_poly(rng, f.degree, bound=3)
            low = lambda: rand_poly(rng, h.degree, bound=3)  # noqa: E731
            X0 = christopher_field(f, g, h * X + low(), low(), low(), h * Y + low())
            assert not infinity_data(X0).invariant
            le = exponential_cofactor(X0, f, g)
            assert le is not None
            assert validate_cofactor_at_infinity(X0, le, "exponential")

    return _cases(n, seed, draw)


# -- dimension bound from independent singular points -----------------------------------------


def suite_melhora(n=N, seed=7):
    def draw(rng):
        d = rng.choice([2, 2, 3])
        r = rng.randint(1, len(monomials_up_to(d - 1)))
        pts = list({_point(rng) for _ in range(r)})
        monos = monomials_up_to(d)
        ker = nullspace([[Poly.monomial(*m).evaluate(p) for m in monos] for p in pts], len(monos))
        if not ker:
            return False

        def combo():
            return poly_sum(Poly({m: c for m, c in zip(monos, v) if c}).scale(rng.randint(-3, 3)) for v in ker)

        X0 = _field(combo(), combo())
        if X0 is None or X0.d < 1 or not independent_points_check(pts, X0.d):
            return False
        sigma = restricted_cofactor_space(X0, pts)
        assert sigma.dim <= len(monomials_up_to(X0.d - 1)) - len(pts)

    return _cases(n, seed, draw)


# -- ordering of multiplicities ----------------------------------------------------------------


def suite_ordering(n=N, seed=8):
    order = 4
    eps = ParamPoly.from_series(TruncSeries.param(order))

    def draw(rng):
        f = rand_exact_degree(rng, 1, bound=3)
        g = rand_exact_degree(rng, 1, bound=3)
        if gcd(f, g).degree == 1:
            return False
        a = [rand_poly(rng, 1, bound=3) for _ in range(4)]
        try:
            X0 = christopher_field(f, g, *a)
        except ValueError:
            return False
        if extactic_curve(X0, 1).is_zero():
            return False
        fam = christopher_family(f, g, *a, order=order)
        F = ParamPoly.from_poly(f, order)
        witness = geometric_lower_bound_witness(fam, [F, F + eps * ParamPoly.from_poly(g, order)], 1, f)
        mu_a = algebraic_multiplicity(X0, f, 1)
        assert witness.count == 2
        assert witness.count <= mu_a
        rep = strong_multiplicity_certify(X0, f, 1, mu_a)
        assert rep.certificate is not None
        assert rep.certificate.verify(X0, f, 1)
        assert witness.count <= rep.certificate.m <= mu_a

    return _cases(n, seed, draw)


# -- Christopher construction ------------------------------------------------------------------


def suite_christopher(n=N, seed=9):
    order = 6
    eps = ParamPoly.from_series(TruncSeries.param(order))

    def draw(rng):
        f = _nonconstant(rng, 2, bound=3)
        g = rand_poly(rng, 2, bound=3, nonzero=True)
        a = [rand_poly(rng, 1, bound=3) for _ in range(4)]
        fam = christopher_family(f, g, *a, order=order)
        F = ParamPoly.from_poly(f, order)
        for curve in (F, F + eps * ParamPoly.from_poly(g, order)):
            cof = param_cofactor(fam, curve)
            assert cof is not None and cof.exact
        try:
            X0 = christopher_field(f, g, *a)
        except ValueError:
            assert fam.a.limit().is_zero() and fam.b.limit().is_zero()
            return False
        assert fam.at_zero() == X0

    return _cases(n, seed, draw)


SUITES = {
    "derive Leibniz/linearity": suite_derive,
    "extactic divisibility": suite_pext,
    "product cofactors": suite_propfactor,
    "curve cofactors at singular points": suite_aaa,
    "exponential cofactors at singular points": suite_ccc,
    "top-degree laws at infinity": suite_bbb,
    "restricted space dimension bound": suite_melhora,
    "multiplicity ordering": suite_ordering,
    "Christopher invariance and specialization": suite_christopher,
}


def test_derive_properties():
    assert suite_derive() >= N


def test_invariant_curve_divides_extactic_curve():
    assert suite_pext() >= N


def test_product_cofactor_property():
    assert suite_propfactor() >= N


def test_curve_cofactor_in_admissible_space():
    assert suite_aaa() >= N


def test_exponential_cofactor_in_admissible_space():
    assert suite_ccc() >= N


def test_top_degree_laws():
    assert suite_bbb() >= N


def test_dimension_bound_for_independent_points():
    assert suite_melhora() >= N


def test_multiplicity_ordering():
    assert suite_ordering() >= N


def test_christopher_family_properties():
    assert suite_christopher() >= N
