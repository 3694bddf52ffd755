import numpy as np
from hypothesis import given, strategies as st

from cwl_degen.linalg import rank_mod_p, rref_mod_p

from oracles import rank_p

PRIMES = [2, 3, 101, 2 ** 31 - 1]


@st.composite
def matrices(draw):
    p = draw(st.sampled_from(PRIMES))
    m, n = draw(st.integers(0, 6)), draw(st.integers(1, 6))
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=m, max_size=m))
    return p, n, rows


@given(matrices())
def test_rank_matches_reference(pn):
    p, n, rows = pn
    A = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    r = rank_p(rows, p)
    assert rank_mod_p(A, p) == r
    R, piv = rref_mod_p(A, p)
    assert R.shape[0] == r == len(piv)


@given(matrices())
def test_rref_shape(pn):
    p, n, rows = pn
    A = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    R, piv = rref_mod_p(A, p)
    assert piv == sorted(piv)
    for k, c in enumerate(piv):
        col = R[:, c]
        assert col[k] == 1 and np.count_nonzero(col) == 1
        assert not R[k, :c].any()
    # same row space: stacking adds no rank
    if R.shape[0]:
        assert rank_mod_p(np.vstack([A, R]), p) == R.shape[0]


def test_identity_and_zero():
    R, piv = rref_mod_p(np.eye(3, dtype=np.int64) * 5, 7)
    assert piv == [0, 1, 2] and (R == np.eye(3)).all()
    assert rank_mod_p(np.zeros((3, 4), dtype=np.int64), 7) == 0
    assert rank_mod_p(np.zeros((0, 4), dtype=np.int64), 7) == 0
