"""Gaussian elimination over GF(p) on int64 numpy arrays.

p < 2^31 keeps every product of two residues below 2^62, so row updates never
overflow int64.
"""

import numpy as np


def _as_matrix(A, p):
    A = np.array(A, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    A %= p
    return A


def rref_mod_p(A, p: int):
    """Reduced row echelon form of A mod p.

    Pivots are chosen column by column, taking the first row with a nonzero
    entry. Returns ``(R, pivots)`` where R holds only the nonzero rows.
    """
    A = _as_matrix(A, p)
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = A[r] * inv % p
        col = A[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            A[rows] = (A[rows] - np.outer(col[rows], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank_mod_p(A, p: int) -> int:
    """Rank of A over GF(p) (forward elimination only)."""
    A = _as_matrix(A, p)
    m, n = A.shape
    if m == 0 or n == 0:
        return 0
    if m < n:
        A = A.T.copy()
        m, n = n, m
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r, c:] = A[r, c:] * inv % p
        below = r + 1 + np.flatnonzero(A[r + 1:, c])
        if below.size:
            A[below, c:] = (A[below, c:] - np.outer(A[below, c], A[r, c:])) % p
        r += 1
    return r
