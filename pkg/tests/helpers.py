import random
from fractions import Fraction

from darbouxkit.parsing import parse_polynomial
from darbouxkit.polyring import Poly, monomials_up_to
from darbouxkit.vfield import VectorField

P = parse_polynomial


def field(a: str, b: str) -> VectorField:
    return VectorField(P(a), P(b))


def fourlines(t, b) -> VectorField:
    """(2t^2 - 2x^2) d/dx + (b - 4xy - 2t^3 y^2) d/dy."""
    t, b = Fraction(t), Fraction(b)
    return VectorField(Poly({(0, 0): 2 * t * t, (2, 0): -2}),
                       Poly({(0, 0): b, (1, 1): -4, (0, 2): -2 * t**3}))


def lineconic(t, b, d) -> VectorField:
    """(-y - b x^2 - d y^2) d/dx + (x + (t - b) x y) d/dy."""
    t, b, d = Fraction(t), Fraction(b), Fraction(d)
    return VectorField(Poly({(0, 1): -1, (2, 0): -b, (0, 2): -d}),
                       Poly({(1, 0): 1, (1, 1): t - b}))


def rand_rational(rng: random.Random, bound: int = 5, denoms=(1, 1, 1, 2, 3)) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.choice(denoms))


def rand_poly(rng: random.Random, deg: int, density: float = 0.6, bound: int = 5,
              nonzero: bool = False) -> Poly:
    while True:
        terms = {m: rand_rational(rng, bound) for m in monomials_up_to(deg) if rng.random() < density}
        p = Poly(terms)
        if not (nonzero and p.is_zero()):
            return p


def rand_exact_degree(rng: random.Random, deg: int, **kw) -> Poly:
    while True:
        p = rand_poly(rng, deg, nonzero=True, **kw)
        if p.degree == deg:
            return p
