"""Groebner bases, Betti tables and componentwise-linearity checks over GF(p)."""

from .core import (
    MonomialOrder, ParseError, Polynomial, RingContext, parse_input,
    parse_polynomial,
)
from .groebner import (
    GroebnerBasis, Ideal, buchberger, component_ideal, graded_piece_basis,
    ideal_equality, ideal_up_to_degree, initial_ideal, normal_form,
    s_polynomial,
)
from .monomial import (
    MonomialIdeal, hilbert_function, hilbert_numerator, is_square_free,
    standard_monomials,
)
from .betti import (
    BettiTable, ModuleSpec, betti_table, has_linear_resolution,
    is_componentwise_linear, koszul_betti, regularity,
)

__version__ = "0.1.0"
