import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from cwl_degen import Ideal, MonomialIdeal, parse_polynomial
from cwl_degen.betti import (
    IDEAL, QUOTIENT, BettiTable, ModuleSpec, beta0, betti_table,
    has_linear_resolution, hh_identity_check, hilbert_betti_consistency,
    is_componentwise_linear, koszul_betti, minimal_generator_counts,
    regularity,
)
from cwl_degen.core import Polynomial
from cwl_degen.corpus import random_ideal
from cwl_degen.monomial import betti_candidate_degrees, is_square_free

from conftest import mono_ideal, ring
from oracles import taylor_betti

VERONESE_Q = {(0, 0): 1, (1, 2): 6, (2, 3): 8, (3, 4): 3}
VERONESE_IN_Q = {(0, 0): 1, (1, 2): 6, (2, 3): 8, (3, 4): 4, (4, 5): 1, (2, 4): 1, (3, 5): 1}

seeds = st.integers(0, 10 ** 6)


def ideal(R, *texts):
    return Ideal(R, [parse_polynomial(t, R) for t in texts])


def fresh(I):
    """Same generators, empty caches."""
    return Ideal(I.ring, I.generators)


def change_coordinates(I, rng):
    """Image of I under a random invertible linear substitution."""
    R, n = I.ring, I.ring.n
    while True:
        A = [[rng.randrange(R.p) for _ in range(n)] for _ in range(n)]
        forms = [Polynomial.from_dict(R, {tuple(int(k == l) for k in range(n)): A[r][l] for l in range(n)})
                 for r in range(n)]
        if all(forms) and len(Ideal(R, forms).gb) == n:
            break
    out = []
    for f in I.generators:
        acc = Polynomial.zero(R)
        for m, c in f.terms:
            t = Polynomial.constant(R, c)
            for k, e in enumerate(m):
                if e:
                    t = t * forms[k] ** e
            acc = acc + t
        out.append(acc)
    return Ideal(R, out)


# -- examples ---------------------------------------------------------------

def test_koszul_examples(veronese):
    R2, R3 = ring("xy"), ring("xyz")
    M = ModuleSpec(IDEAL, Ideal.from_monomials(mono_ideal(R2, (2, 0), (1, 1))))
    assert koszul_betti(M, 0, 2) == 2 and koszul_betti(M, 1, 3) == 1 and koszul_betti(M, 1, 2) == 0
    V = ModuleSpec(IDEAL, ideal(R3, "x", "y", "z"))
    assert [koszul_betti(V, i, i + 1) for i in range(3)] == [3, 3, 1]
    assert koszul_betti(ModuleSpec(QUOTIENT, veronese), 1, 2) == 6


def test_veronese_tables(veronese, veronese_initial):
    assert betti_table(veronese, QUOTIENT).entries == VERONESE_Q
    assert betti_table(veronese_initial, QUOTIENT).entries == VERONESE_IN_Q
    assert betti_table(ideal(ring("x"), "x")).entries == {(0, 1): 1}
    assert betti_table(Ideal(ring("xy"), [])).entries == {}
    assert betti_table(Ideal(ring("xy"), []), QUOTIENT).entries == {(0, 0): 1}


def test_regularity_examples(veronese, veronese_initial):
    assert regularity(veronese) == 2
    assert regularity(veronese_initial) == 3
    assert regularity(ideal(ring("xyz"), "x", "y", "z")) == 1
    with pytest.raises(ValueError):
        regularity(Ideal(ring("xy"), []))


def test_linear_resolution_examples(veronese, veronese_initial):
    assert has_linear_resolution(veronese, 2)
    assert not has_linear_resolution(veronese_initial, 2)
    assert has_linear_resolution(Ideal(ring("xy"), []), 5)
    assert not has_linear_resolution(veronese, 3)


def test_cwl_examples(veronese, veronese_initial):
    assert is_componentwise_linear(veronese)
    rep = is_componentwise_linear(veronese_initial)
    assert not rep and rep.failing_degrees() == [2]
    assert is_componentwise_linear(ideal(ring("xy"), "x", "y^2"))


def test_hh_identity_examples(veronese, veronese_initial):
    assert hh_identity_check(veronese).holds
    assert hh_identity_check(ideal(ring("xy"), "x", "y^2")).holds
    rep = hh_identity_check(veronese_initial)
    assert not rep.precondition


def test_consistency_examples(veronese, veronese_initial):
    assert betti_table(veronese).euler_polynomial() == [0, 0, 6, -8, 3]
    assert hilbert_betti_consistency(veronese) and hilbert_betti_consistency(veronese, QUOTIENT)
    assert hilbert_betti_consistency(veronese_initial)
    assert betti_table(veronese_initial).euler_polynomial() == [0, 0, 6, -8, 3]
    assert betti_table(ideal(ring("x"), "x")).euler_polynomial() == [0, 1]


def test_table_accessors(veronese):
    t = betti_table(veronese, QUOTIENT)
    assert t.projective_dimension() == 3 and t.total(2) == 8
    assert t.records() == [(0, 0, 1), (1, 2, 6), (2, 3, 8), (3, 4, 3)]
    assert t.p == 101


def test_bad_cells(veronese):
    spec = ModuleSpec(IDEAL, veronese)
    with pytest.raises(ValueError):
        koszul_betti(spec, 7, 3)
    with pytest.raises(ValueError):
        koszul_betti(spec, 0, -1)
    with pytest.raises(ValueError):
        koszul_betti(ModuleSpec(IDEAL, ideal(ring("xy"), "x^2 - y")), 0, 2)


def test_threads_agree(veronese, monkeypatch):
    serial = betti_table(fresh(veronese), QUOTIENT, workers=1)
    assert betti_table(fresh(veronese), QUOTIENT, workers=4) == serial
    monkeypatch.setenv("CWL_DEGEN_THREADS", "3")
    assert betti_table(fresh(veronese), QUOTIENT) == serial


# -- properties -------------------------------------------------------------

@st.composite
def monomial_ideals(draw):
    n = draw(st.integers(1, 4))
    gens = draw(st.lists(st.tuples(*[st.integers(0, 2)] * n).filter(any), min_size=1, max_size=5))
    return MonomialIdeal(ring("xyzw"[:n]), gens)


@settings(max_examples=60, deadline=None)
@given(monomial_ideals())
def test_monomial_tables_match_taylor_oracle(M):
    expect = taylor_betti(M.gens, M.n)
    assert betti_table(Ideal.from_monomials(M), QUOTIENT).entries == expect
    assert set(expect) <= betti_candidate_degrees(M, "quotient")


@settings(max_examples=40, deadline=None)
@given(monomial_ideals())
def test_graded_and_multigraded_routes_agree(M):
    I = Ideal.from_monomials(M)
    for kind in (QUOTIENT, IDEAL):
        spec = ModuleSpec(kind, I)
        for i in range(M.n + 1):
            for j in range(0, 2 * M.n + 2):
                assert koszul_betti(spec, i, j, multigraded=True) == koszul_betti(spec, i, j, multigraded=False)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_shift_law_and_semicontinuity(s):
    I = random_ideal(random.Random(s))
    J = Ideal.from_monomials(I.initial())
    tI, tQ = betti_table(I, IDEAL), betti_table(I, QUOTIENT)
    assert tQ.entries == {(0, 0): 1, **{(i + 1, j): v for (i, j), v in tI.entries.items()}}
    tJ = betti_table(J, IDEAL)
    assert all(v <= tJ[ij] for ij, v in tI.entries.items())
    for spec in (I, J):
        assert hilbert_betti_consistency(spec, IDEAL) and hilbert_betti_consistency(spec, QUOTIENT)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_beta0_matches_minimal_generators(s):
    I = random_ideal(random.Random(s))
    row0 = {j: v for (i, j), v in betti_table(I).entries.items() if i == 0}
    assert minimal_generator_counts(I) == row0
    assert beta0(I) == sum(row0.values())
    M = I.initial()
    assert beta0(M) == betti_table(M).total(0)


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_tables_invariant_under_coordinate_change(s):
    rng = random.Random(s)
    I = random_ideal(rng, max_vars=3)
    assert betti_table(change_coordinates(I, rng)) == betti_table(I)


def test_complete_intersection_is_koszul(rng):
    R = ring("xyz")
    I = change_coordinates(ideal(R, "x^2", "y^3", "z"), rng)
    t = betti_table(I, QUOTIENT)
    assert t.entries == {(0, 0): 1, (1, 1): 1, (1, 2): 1, (1, 3): 1,
                         (2, 3): 1, (2, 4): 1, (2, 5): 1, (3, 6): 1}
    V = ideal(ring("xyzw"), "x", "y", "z", "w")
    assert [betti_table(V, QUOTIENT)[(i, i)] for i in range(5)] == [comb(4, i) for i in range(5)]


def _square_free_corpus(seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, 4)
        R = ring("xyzw"[:n])
        sq = [m for m in [(a, b, c, d)[:n] for a in (0, 1) for b in (0, 1) for c in (0, 1) for d in (0, 1)]
              if 2 <= sum(m) <= 3]
        gens = []
        for _ in range(rng.randint(1, 4)):
            terms = rng.sample(sq, rng.randint(1, 2))
            gens.append(Polynomial.from_dict(R, {m: rng.randrange(1, R.p) for m in terms
                                                 if sum(m) == sum(terms[0])}))
        I = Ideal(R, gens)
        if is_square_free(I.initial()):
            out.append(I)
    return out


def test_regularity_agrees_when_initial_square_free(seed):
    for I in _square_free_corpus(seed, 40):
        assert regularity(I) == regularity(I.initial())


def test_linear_square_free_gives_equal_tables(minors):
    assert has_linear_resolution(minors, 2) and is_square_free(minors.initial())
    assert betti_table(minors) == betti_table(minors.initial())
    R = ring(["x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"])
    gens = ["x%d*y%d - x%d*y%d" % (a, b, b, a) for a in range(1, 5) for b in range(a + 1, 5)]
    I = ideal(R, *gens)
    assert is_square_free(I.initial()) and has_linear_resolution(I, 2)
    assert betti_table(I) == betti_table(I.initial())
    assert betti_table(I).entries == {(0, 2): 6, (1, 3): 8, (2, 4): 3}
