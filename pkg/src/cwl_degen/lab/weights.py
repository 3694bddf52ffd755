"""Weight vectors selecting a Groebner basis's leading terms, and w-homogenization."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd

from ..core.polynomial import Polynomial
from ..core.ring import MonomialOrder, RingContext
from ..groebner import GroebnerBasis, Ideal

WEIGHT_BOUND = 10 ** 6


class WeightError(ValueError):
    pass


def weight_constraints(G: GroebnerBasis) -> list:
    """Exponent differences lead - other, one per non-leading term."""
    out = []
    for g in G:
        lead = g.lm
        for m, _ in g.terms[1:]:
            out.append(tuple(a - b for a, b in zip(lead, m)))
    return out


def verify_weight_vector(G: GroebnerBasis, w) -> bool:
    if len(w) != G.ring.n or any(int(x) < 1 for x in w):
        return False
    return all(sum(a * b for a, b in zip(w, v)) > 0 for v in weight_constraints(G))


def _simplex_max(A, b, c):
    """max c.x subject to A x <= b, x >= 0, with b >= 0 (slack start).

    Exact arithmetic; Bland's rule rules out cycling.
    """
    m, n = len(A), len(c)
    T = []
    for r in range(m):
        row = [Fraction(x) for x in A[r]] + [Fraction(int(k == r)) for k in range(m)]
        T.append(row + [Fraction(b[r])])
    obj = [Fraction(x) for x in c] + [Fraction(0)] * (m + 1)
    basis = [n + r for r in range(m)]
    while True:
        enter = next((j for j in range(n + m) if obj[j] > 0), None)
        if enter is None:
            break
        best = None
        for r in range(m):
            a = T[r][enter]
            if a > 0:
                ratio = T[r][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            raise WeightError("linear program is unbounded")
        r = best[1]
        piv = T[r][enter]
        T[r] = [x / piv for x in T[r]]
        for k in range(m):
            if k != r and T[k][enter]:
                f = T[k][enter]
                T[k] = [x - f * y for x, y in zip(T[k], T[r])]
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, T[r])]
        basis[r] = enter
    x = [Fraction(0)] * (n + m)
    for r, j in enumerate(basis):
        x[j] = T[r][-1]
    return x[:n]


def find_weight_vector(G: GroebnerBasis, bound: int = WEIGHT_BOUND) -> tuple:
    """Positive integer w with w.(lead - other) > 0 for every element of G.

    Maximizes the smallest slack s over the cone {v.w >= s, w_i >= s} cut by
    sum(w) <= 1; then w/s has entries >= 1 and clears to integers.
    """
    n = G.ring.n
    cons = sorted(set(weight_constraints(G)))
    if not cons:
        return (1,) * n
    A, b = [], []
    for v in cons:
        A.append([-x for x in v] + [1])
        b.append(0)
    for i in range(n):
        A.append([-int(k == i) for k in range(n)] + [1])
        b.append(0)
    A.append([1] * n + [0])
    b.append(1)
    sol = _simplex_max(A, b, [0] * n + [1])
    s = sol[n]
    if s <= 0:
        raise WeightError("no positive weight vector selects these leading terms")
    scaled = [x / s for x in sol[:n]]
    den = reduce(lambda a, q: a * q.denominator // gcd(a, q.denominator), scaled, 1)
    ints = [int(x * den) for x in scaled]
    g = reduce(gcd, ints)
    w = tuple(x // g for x in ints)
    if max(w) > bound:
        raise WeightError("weight vector exceeds bound %d" % bound)
    if not verify_weight_vector(G, w):
        raise WeightError("internal error: computed weight vector fails verification")
    return w


class ExtendedRingPolynomial:
    """A polynomial in R[t], w-homogeneous for the weights (w, 1)."""

    def __init__(self, poly: Polynomial, base: RingContext, weights):
        self.poly = poly
        self.base = base
        self.weights = tuple(weights)

    def w_degrees(self) -> set:
        full = self.weights + (1,)
        return {sum(a * b for a, b in zip(full, m)) for m, _ in self.poly.terms}

    def is_w_homogeneous(self) -> bool:
        return len(self.w_degrees()) <= 1

    def substitute_t(self, value: int) -> Polynomial:
        p = self.base.p
        d = {}
        for m, c in self.poly.terms:
            k = m[-1]
            if k and value == 0:
                continue
            base_m = m[:-1]
            d[base_m] = (d.get(base_m, 0) + c * pow(value, k, p)) % p
        return Polynomial.from_dict(self.base, d)

    def __eq__(self, other):
        return isinstance(other, ExtendedRingPolynomial) and self.poly == other.poly

    def __repr__(self):
        return "ExtendedRingPolynomial(%s)" % self.poly

    def __str__(self):
        return str(self.poly)


def extended_ring(ring: RingContext, w) -> RingContext:
    t = "t"
    while t in ring.names:
        t += "_"
    tb = ring.order.variant if ring.order.variant != "weight" else ring.order.tiebreak
    return RingContext(ring.p, ring.names + (t,), MonomialOrder.weighted(tuple(w) + (1,), tb))


def homogenize_ideal(I, w) -> list:
    """w-homogenize each element of the reduced Groebner basis with a new variable t."""
    G = I.gb if isinstance(I, Ideal) else I
    w = tuple(int(x) for x in w)
    if not verify_weight_vector(G, w):
        raise WeightError("weight vector %s does not select the leading terms" % (w,))
    ext = extended_ring(G.ring, w)
    out = []
    for g in G:
        wd = [sum(a * b for a, b in zip(w, m)) for m, _ in g.terms]
        D = max(wd)
        terms = {m + (D - k,): c for (m, c), k in zip(g.terms, wd)}
        out.append(ExtendedRingPolynomial(Polynomial.from_dict(ext, terms), G.ring, w))
    return out
