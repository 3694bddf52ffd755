"""Seeded random homogeneous ideals for fuzzing."""

from __future__ import annotations

import random

from .core.polynomial import Polynomial
from .core.ring import MonomialOrder, RingContext, monomials_of_degree
from .groebner import Ideal

NAMES = "xyzw"


def random_form(rng: random.Random, ring: RingContext, d: int, max_terms: int = 3) -> Polynomial:
    """Nonzero form of degree d with at most max_terms terms."""
    monos = monomials_of_degree(ring.n, d)
    k = rng.randint(1, min(max_terms, len(monos)))
    terms = {m: rng.randrange(1, ring.p) for m in rng.sample(monos, k)}
    return Polynomial.from_dict(ring, terms)


def random_ideal(rng: random.Random, max_vars: int = 4, max_gens: int = 4, max_degree: int = 3,
                 p: int = 101, order: str = "grevlex", equigenerated: bool = False) -> Ideal:
    n = rng.randint(2, max_vars)
    ring = RingContext(p, tuple(NAMES[:n]), MonomialOrder(order))
    r = rng.randint(1, max_gens)
    if equigenerated:
        d = rng.randint(1, max_degree)
        degs = [d] * r
    else:
        degs = [rng.randint(1, max_degree) for _ in range(r)]
    return Ideal(ring, [random_form(rng, ring, d) for d in degs])


def corpus(seed: int, count: int, **kw) -> list:
    rng = random.Random(seed)
    return [random_ideal(rng, **kw) for _ in range(count)]
