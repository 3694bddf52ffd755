from .ring import (
    DEFAULT_CHARACTERISTIC, EQUAL, GREATER, LESS, MonomialOrder, RingContext,
    divides, inverse, is_prime, mono_lcm, monomials_of_degree,
)
from .polynomial import Polynomial, RingMismatch, format_polynomial
from .parser import ParseError, format_input, parse_input, parse_polynomial


def monomial_compare(order: MonomialOrder, m1, m2) -> int:
    return order.compare(tuple(m1), tuple(m2))


def leading_term(f: Polynomial):
    return f.leading_term()


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def reduction_step(f: Polynomial, c: int, u, g: Polynomial) -> Polynomial:
    return f.reduction_step(c, tuple(u), g)
