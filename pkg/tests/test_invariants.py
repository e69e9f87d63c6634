import pytest

from darbouxkit.extactic import extactic_curve
from darbouxkit.invariants import (
    NotInvariantError,
    RationalFirstIntegralRegime,
    algebraic_multiplicity,
    cofactor,
    exp_coefficient_space_dim,
    exponential_cofactor,
    exponential_factor,
    integrable_multiplicity_lower_bound,
    invariant_curve,
    product_cofactor_check,
    strong_multiplicity_certify,
    validate_cofactor_at_infinity,
)
from darbouxkit.polyring import ONE, ZERO, X, Y, Poly

from helpers import P, lineconic, field, fourlines

LINECONIC = lineconic(0, 1, 2)
G_LINECONIC = P("1 + 2*y - x^2 - 6*y^2")


def test_cofactors():
    assert cofactor(LINECONIC, P("1 - y")) == P("-x")
    assert cofactor(field("-x", "y"), X) == Poly.const(-1)
    assert cofactor(field("-x", "y"), P("x + 1")) is None
    with pytest.raises(ValueError):
        cofactor(LINECONIC, Poly.const(3))


def test_invariant_curve_raises():
    with pytest.raises(NotInvariantError):
        invariant_curve(LINECONIC, X)
    assert invariant_curve(LINECONIC, P("1 - y")).cofactor == P("-x")


def test_product_cofactor():
    assert product_cofactor_check(LINECONIC, [(P("1 - y"), 2)])
    assert cofactor(LINECONIC, P("(1 - y)^2")) == P("-2*x")
    assert product_cofactor_check(field("-x", "y"), [(X, 1), (Y, 1)])
    with pytest.raises(NotInvariantError):
        product_cofactor_check(LINECONIC, [(X, 1)])


def test_exponential_cofactor():
    assert exponential_cofactor(LINECONIC, P("(1 - y)^2"), G_LINECONIC) == P("4*x")
    assert exponential_cofactor(field("x", "y"), Y, X) == ZERO
    assert exponential_cofactor(LINECONIC, P("1 - y"), P("x^2")) is None
    with pytest.raises(NotInvariantError):
        exponential_cofactor(LINECONIC, X, Y)
    e = exponential_factor(LINECONIC, P("(1 - y)^2"), G_LINECONIC)
    lf = cofactor(LINECONIC, e.f)
    from darbouxkit.vfield import derive

    assert derive(LINECONIC, e.g) == e.g * lf + e.f * e.cofactor


def test_algebraic_multiplicity():
    assert algebraic_multiplicity(fourlines(0, 1), X, 1) == 4
    assert algebraic_multiplicity(fourlines(0, 1), X * X, 2) == 8
    assert algebraic_multiplicity(LINECONIC, P("1 - y"), 1) == 1
    assert algebraic_multiplicity(LINECONIC, P("(1 - y)^2"), 2) == 3
    assert algebraic_multiplicity(LINECONIC, P("(1 - y)^2"), 1) == 0
    with pytest.raises(RationalFirstIntegralRegime):
        algebraic_multiplicity(field("-x", "y"), X, 2)


def test_strong_certificate_when_curve_is_the_extactic_curve():
    X0 = field("-x", "y")
    f = P("x*y")
    rep = strong_multiplicity_certify(X0, f, 1, 1, generators=[(0, 1, 2)])
    cert = rep.certificate
    assert cert is not None and cert.m == 1
    assert cert.verify(X0, f, 1)


def test_strong_certificates_reverify_and_respect_algebraic_multiplicity():
    for X0, f, l in [(fourlines(0, 1), X, 1), (LINECONIC, P("1 - y"), 1), (LINECONIC, P("(1 - y)^2"), 2)]:
        rep = strong_multiplicity_certify(X0, f, l, 8)
        assert rep.certificate is not None
        assert rep.certificate.verify(X0, f, l)
        assert rep.certificate.m <= algebraic_multiplicity(X0, f, l)


def test_strong_inconclusive_report():
    rep = strong_multiplicity_certify(LINECONIC, P("(1 - y)^2"), 2, 1,
                                      generators=[(0, 1, 2, 3, 4, 6), (0, 1, 2, 3, 4, 7)])
    assert rep.inconclusive
    assert rep.lines[-1].startswith("no certificate for m=1 up to cap")
    with pytest.raises(ValueError):
        strong_multiplicity_certify(LINECONIC, P("1 - y"), 1, 1, generators=[])


def test_exp_coefficient_space():
    assert exp_coefficient_space_dim(X, [(Poly.const(2), 1), (P("-1/4"), 1)]) == 1
    assert exp_coefficient_space_dim(X, [(Poly.const(2), 1), (P("-2*x*y + 1/2"), 2)]) == 2
    assert exp_coefficient_space_dim(X, []) == 0
    assert integrable_multiplicity_lower_bound(X, [(Poly.const(2), 1)]) == 2


def test_cofactor_at_infinity():
    X0 = field("x^2", "x*y")
    assert cofactor(X0, Y) == X
    assert validate_cofactor_at_infinity(X0, X, "curve", 1)
    assert not validate_cofactor_at_infinity(X0, P("x + 1"), "exponential")
    assert validate_cofactor_at_infinity(X0, Poly.const(3), "exponential")
    assert not validate_cofactor_at_infinity(X0, ONE, "curve", 1)
    with pytest.raises(ValueError):
        validate_cofactor_at_infinity(LINECONIC, X, "curve", 1)
    with pytest.raises(ValueError):
        validate_cofactor_at_infinity(X0, X, "line")
