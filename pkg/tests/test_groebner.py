import random

import pytest
from hypothesis import given, settings, strategies as st

from cwl_degen import (
    Ideal, buchberger, component_ideal, graded_piece_basis, ideal_equality,
    ideal_up_to_degree, initial_ideal, normal_form, s_polynomial,
)
from cwl_degen.core import Polynomial, parse_polynomial
from cwl_degen.corpus import random_ideal
from cwl_degen.groebner import dim_ideal_piece, max_ideal_times
from cwl_degen.monomial import standard_monomials

from conftest import mono_ideal, ring
from oracles import macaulay_dim


def P(text, R):
    return parse_polynomial(text, R)


def ideal(R, *texts):
    return Ideal(R, [P(t, R) for t in texts])


seeds = st.integers(0, 10 ** 6)


def rand_ideal(s, **kw):
    return random_ideal(random.Random(s), **kw)


# -- examples ---------------------------------------------------------------

def test_normal_form_examples():
    R = ring("xyz")
    g = P("x^2 - y", R)
    assert not normal_form(g, [g])
    assert normal_form(P("x^2*y", ring("xy")), [P("x^2 - y", ring("xy"))]) == P("y^2", ring("xy"))
    assert normal_form(P("z", R), [g]) == P("z", R)


def test_s_polynomial_examples():
    R = ring("xyz")
    assert s_polynomial(P("x^2 - y", R), P("x*y - z", R)) == P("-y^2 + x*z", R)
    f = P("x^2 + y*z", R)
    assert not s_polynomial(f, f)
    assert not s_polynomial(P("x^2", R), P("y^2", R))


def test_buchberger_examples(veronese):
    G = veronese.gb
    assert len(G) == 6
    assert str(initial_ideal(G)) == "(b^2, b*c, c^2, c*d, c*e, e^2)"
    R = ring("xy")
    assert buchberger([P("x^2 - y", R)]).elements == (P("x^2 - y", R),)
    L = ring("xyz", "lex")
    G = buchberger([P("x - y", L), P("y - z", L)])
    assert G.elements == (P("x - z", L), P("y - z", L))
    assert initial_ideal(G) == mono_ideal(L, (1, 0, 0), (0, 1, 0))


def test_zero_and_unit_ideals():
    R = ring("xy")
    assert len(Ideal(R, []).gb) == 0
    assert len(Ideal(R, [Polynomial.zero(R)]).gb) == 0
    G = ideal(R, "x + 1", "x").gb
    assert G.elements == (Polynomial.constant(R, 1),)


def test_graded_piece_examples(veronese):
    R = ring("xy")
    assert len(graded_piece_basis(ideal(R, "x", "y^2"), 2)) == 3
    assert len(graded_piece_basis(ideal(R, "x^2"), 1)) == 0
    assert len(graded_piece_basis(veronese, 2)) == 6


def test_ideal_equality_examples(veronese):
    R = ring("xy")
    assert ideal_equality(ideal(R, "x", "y"), ideal(R, "x + y", "y"))
    assert not ideal_equality(ideal(R, "x^2"), ideal(R, "x"))
    assert ideal_equality(veronese, Ideal(veronese.ring, veronese.gb.elements))


def test_component_and_truncation_examples(veronese):
    R = ring("xy")
    I = ideal(R, "x", "y^2")
    assert ideal_equality(component_ideal(I, 1), ideal(R, "x"))
    assert ideal_equality(component_ideal(I, 2), ideal(R, "x^2", "x*y", "y^2"))
    assert ideal_equality(component_ideal(veronese, 2), veronese)
    assert ideal_equality(ideal_up_to_degree(I, 1), ideal(R, "x"))
    assert ideal_up_to_degree(veronese, 1).is_zero()
    assert ideal_equality(max_ideal_times(ideal(R, "x"), 1), ideal(R, "x^2", "x*y"))


def test_gb_cache_is_compute_once(veronese):
    from concurrent.futures import ThreadPoolExecutor
    I = Ideal(veronese.ring, veronese.generators)
    with ThreadPoolExecutor(8) as ex:
        gbs = list(ex.map(lambda _: I.gb, range(16)))
    assert all(g is gbs[0] for g in gbs)


# -- properties -------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(seeds)
def test_buchberger_postcondition(s):
    I = rand_ideal(s)
    G = I.gb
    for f in I.generators:
        assert not normal_form(f, G)
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            assert not normal_form(s_polynomial(G.elements[a], G.elements[b]), G)
    for g in G:
        assert g.lc == 1 and g.is_homogeneous()
        others = [h.lm for h in G if h is not g]
        assert all(not any(all(x >= y for x, y in zip(m, lm)) for lm in others) for m, _ in g.terms)


@settings(max_examples=40, deadline=None)
@given(seeds, st.randoms(use_true_random=False))
def test_reduced_gb_unique(s, r):
    I = rand_ideal(s)
    gens = list(I.generators)
    r.shuffle(gens)
    scaled = [g.scale(r.randrange(1, I.ring.p)) for g in gens]
    assert Ideal(I.ring, scaled).gb.elements == I.gb.elements


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 5))
def test_normal_form_sound_and_idempotent(s, k):
    I = rand_ideal(s)
    rng = random.Random(s + k)
    f = Polynomial.from_dict(I.ring, {
        tuple(rng.randint(0, 3) for _ in range(I.ring.n)): rng.randrange(1, 101) for _ in range(5)})
    G = I.gb
    nf = normal_form(f, G)
    assert normal_form(nf, G) == nf
    assert not normal_form(f - nf, G)
    lms = G.leading_monomials()
    assert all(not any(all(x >= y for x, y in zip(m, lm)) for lm in lms) for m, _ in nf.terms)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_hilbert_invariance(s):
    I = rand_ideal(s)
    inI = I.initial()
    for d in range(9):
        expect = macaulay_dim(I.generators, I.ring, d)
        assert len(graded_piece_basis(I, d)) == expect
        assert dim_ideal_piece(I, d) == expect
        assert len(I.ring.monomials(d)) - len(standard_monomials(inI, d)) == expect


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(1, 5))
def test_graded_piece_rows_are_m_minus_normal_form(s, d):
    I = rand_ideal(s)
    B = graded_piece_basis(I, d)
    for row, m in zip(B.rows, B.pivots):
        assert row.lm == m
        assert row == Polynomial.monomial(I.ring, m) - normal_form(Polynomial.monomial(I.ring, m), I.gb)
        assert B.coordinates(row) == [int(x == m) for x in B.pivots]


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_stabilization(s):
    I = rand_ideal(s)
    D = max(max(I.generator_degrees()), I.initial().max_degree())
    assert ideal_equality(ideal_up_to_degree(I, D), I)


def test_non_homogeneous_rejected():
    R = ring("xy")
    I = ideal(R, "x^2 - y")
    with pytest.raises(ValueError):
        graded_piece_basis(I, 2)
    with pytest.raises(ValueError):
        ideal_up_to_degree(I, 2)
