"""Exact computations with invariant algebraic curves of planar polynomial vector fields."""

from .polyring import ONE, X, Y, ZERO, Poly, RationalFunction, canonical, gcd
from .parsing import ParseError, parse_polynomial
from .vfield import VectorField, derive, divergence, infinity_data
from .extactic import (
    budget,
    budget_check,
    extactic_curve,
    extactic_ideal_generator,
    rational_first_integral_degree,
)
from .invariants import (
    ExponentialFactor,
    InvariantCurve,
    NotInvariantError,
    RationalFirstIntegralRegime,
    algebraic_multiplicity,
    cofactor,
    exponential_cofactor,
    exponential_factor,
    invariant_curve,
    strong_multiplicity_certify,
)
from .cofactorspace import CofactorSubspace, restricted_cofactor_space
from .darboux import CertificateKind, IntegrabilityClass, integrability_class, solve_darboux
from .series import InconclusiveTruncation, TruncSeries
from .deform import ParamPoly, ParamVectorField, curve_derivative, parse_param_poly

__version__ = "0.1.0"
