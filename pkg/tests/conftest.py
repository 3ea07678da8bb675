"""Shared randomized-input generators for the test suite.

All generators take an explicit random.Random so every test controls its
own seed and reruns are reproducible.
"""
from fractions import Fraction
import random

from involutive import Monomial, Ordering, Polynomial, VariableContext

NAMES = ("x", "y", "z", "w")


def random_context(rng: random.Random, max_vars: int = 4) -> VariableContext:
    return VariableContext.of(*NAMES[: rng.randint(1, max_vars)])


def random_monomial(rng: random.Random, ctx: VariableContext, max_degree: int = 5) -> Monomial:
    degree = rng.randint(0, max_degree)
    exps = [0] * ctx.n
    for _ in range(degree):
        exps[rng.randrange(ctx.n)] += 1
    return ctx.monomial(exps)


def random_monomial_set(
    rng: random.Random, ctx: VariableContext, max_size: int = 6, max_degree: int = 5
) -> list[Monomial]:
    size = rng.randint(1, max_size)
    seen = {}
    for _ in range(size * 3):
        m = random_monomial(rng, ctx, max_degree)
        seen[m] = True
        if len(seen) == size:
            break
    return list(seen)


def random_polynomial(
    rng: random.Random,
    ctx: VariableContext,
    ordering: Ordering,
    max_degree: int = 3,
    max_terms: int = 4,
    coeff_bound: int = 5,
) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        c = 0
        while c == 0:
            c = rng.randint(-coeff_bound, coeff_bound)
        terms[random_monomial(rng, ctx, max_degree)] = Fraction(c)
    return Polynomial.from_terms(ctx, ordering, terms)


def random_ideal(
    rng: random.Random,
    ctx: VariableContext,
    ordering: Ordering,
    max_generators: int = 4,
    max_degree: int = 3,
) -> list[Polynomial]:
    polys = []
    for _ in range(rng.randint(1, max_generators)):
        p = random_polynomial(rng, ctx, ordering, max_degree)
        if not p.is_zero:
            polys.append(p)
    if not polys:
        polys.append(random_polynomial(rng, ctx, ordering, max_degree))
    return polys


def zero_dimensional_ideal(rng: random.Random, ctx: VariableContext, ordering: Ordering) -> list[Polynomial]:
    """Generators whose leading monomials include a pure power of every
    variable, so the quotient ring is finite dimensional and every
    division (Pommaret included) admits a finite basis."""
    assert ordering.degree_compatible
    polys = []
    for i in range(ctx.n):
        d = rng.randint(1, 3)
        terms = {ctx.monomial(tuple(d if j == i else 0 for j in range(ctx.n))): Fraction(1)}
        for _ in range(rng.randint(0, 2)):
            c = rng.randint(-5, 5)
            if c:
                m = random_monomial(rng, ctx, d - 1)
                terms[m] = terms.get(m, Fraction(0)) + c
        p = Polynomial.from_terms(ctx, ordering, terms)
        polys.append(p)
    if rng.random() < 0.5 and len(polys) < 4:
        extra = random_polynomial(rng, ctx, ordering, max_degree=3)
        if not extra.is_zero:
            polys.append(extra)
    return polys
