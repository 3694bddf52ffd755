"""Monomial ideals: minimal generators, truncations and Hilbert series."""

from __future__ import annotations

from collections import Counter
from math import comb

from .core.ring import (
    RingContext, degree, divides, mono_div, mono_gcd, mono_lcm, mono_mul,
    monomials_of_degree,
)

MAX_TAYLOR_GENERATORS = 24


class TooManyGenerators(ValueError):
    pass


def _minimal_set(monos) -> list:
    """Divisibility-minimal subset of an iterable of exponent tuples."""
    out = []
    for m in sorted(set(monos), key=degree):
        if not any(divides(g, m) for g in out):
            out.append(m)
    return out


class MonomialIdeal:
    """Monomial ideal given by its minimal generators, sorted decreasing."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring: RingContext, monos=(), minimal: bool = False):
        self.ring = ring
        monos = [tuple(m) for m in monos]
        for m in monos:
            if len(m) != ring.n:
                raise ValueError("monomial %r has wrong length for %d variables" % (m, ring.n))
        if not minimal:
            monos = _minimal_set(monos)
        self.gens = tuple(ring.sorted_desc(monos))

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return (self.ring.names == other.ring.names and self.ring.p == other.ring.p
                and set(self.gens) == set(other.gens))

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.gens)))

    def __repr__(self):
        return "MonomialIdeal(%s)" % self

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(%s)" % ", ".join(self.ring.format_monomial(m) for m in self.gens)

    @property
    def n(self) -> int:
        return self.ring.n

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.ring.one() in self.gens

    def contains(self, m) -> bool:
        return any(divides(g, m) for g in self.gens)

    def degrees(self) -> list:
        return [degree(g) for g in self.gens]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def with_ring(self, ring: RingContext) -> "MonomialIdeal":
        return MonomialIdeal(ring, self.gens, minimal=True)


def minimalize(ring: RingContext, monos) -> MonomialIdeal:
    return MonomialIdeal(ring, monos)


def is_square_free(M: MonomialIdeal) -> bool:
    return all(e <= 1 for g in M.gens for e in g)


def trunc_geq(M: MonomialIdeal, d: int) -> MonomialIdeal:
    """The ideal generated by the degree-d monomials of M."""
    out = set()
    for g in M.gens:
        k = d - degree(g)
        if k < 0:
            continue
        for u in monomials_of_degree(M.n, k):
            out.add(mono_mul(g, u))
    return MonomialIdeal(M.ring, out, minimal=True)


def trunc_leq(M: MonomialIdeal, d: int) -> MonomialIdeal:
    """The ideal generated by the minimal generators of degree <= d."""
    return MonomialIdeal(M.ring, [g for g in M.gens if degree(g) <= d], minimal=True)


def scale_by_max_ideal_power(M: MonomialIdeal, d: int) -> MonomialIdeal:
    """m^d * M for the homogeneous maximal ideal m."""
    us = monomials_of_degree(M.n, d)
    return MonomialIdeal(M.ring, [mono_mul(g, u) for g in M.gens for u in us])


def standard_monomials(M: MonomialIdeal, d: int) -> list:
    """Degree-d monomials outside M, decreasing in the ring order."""
    return [m for m in M.ring.monomials(d) if not M.contains(m)]


def hilbert_function(M: MonomialIdeal, d: int, kind: str = "quotient") -> int:
    q = len(standard_monomials(M, d))
    if kind == "quotient":
        return q
    if kind == "ideal":
        return comb(M.n + d - 1, d) - q
    raise ValueError("kind must be 'quotient' or 'ideal'")


# -- Hilbert numerators -----------------------------------------------------

def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def poly_sub(a, b):
    return _trim(_padd(a, [-c for c in b]))


class HilbertNumerator:
    """Integer polynomial N(t) with HS_{R/M}(t) = N(t) / (1 - t)^n."""

    __slots__ = ("coeffs", "n")

    def __init__(self, coeffs, n: int):
        self.coeffs = tuple(_trim(coeffs))
        self.n = n

    def __eq__(self, other):
        if not isinstance(other, HilbertNumerator):
            return NotImplemented
        return self.coeffs == other.coeffs and self.n == other.n

    def __repr__(self):
        return "HilbertNumerator(%s, n=%d)" % (list(self.coeffs), self.n)

    def __str__(self):
        return format_int_poly(self.coeffs)

    def __call__(self, t):
        return sum(c * t ** k for k, c in enumerate(self.coeffs))

    def series_coefficient(self, d: int) -> int:
        """Coefficient of t^d in N(t) / (1 - t)^n."""
        n = self.n
        return sum(c * comb(d - k + n - 1, n - 1) for k, c in enumerate(self.coeffs) if k <= d)

    def codimension(self) -> int:
        """Multiplicity of the factor (1 - t) in N."""
        c = list(self.coeffs)
        k = 0
        while any(c) and sum(c) == 0:
            # synthetic division by (1 - t): q_i = sum_{j<=i} c_j
            acc, q = 0, []
            for x in c[:-1]:
                acc += x
                q.append(acc)
            c = _trim(q) if q else [0]
            k += 1
        return k


def format_int_poly(coeffs, var: str = "t") -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else var if k == 1 else "%s^%d" % (var, k)
        a = abs(c)
        body = str(a) if not mono else mono if a == 1 else "%d*%s" % (a, mono)
        if not parts:
            parts.append("-" + body if c < 0 else body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


def _pick_pivot(gens):
    # most frequently occurring variable; then the generator with the
    # highest power of it
    counts = Counter(k for g in gens for k, e in enumerate(g) if e)
    k = max(sorted(counts), key=lambda v: counts[v])
    return max(range(len(gens)), key=lambda i: (gens[i][k], -i))


def _numerator(gens: tuple, memo: dict) -> list:
    if not gens:
        return [1]
    if any(degree(g) == 0 for g in gens):
        return [0]
    key = frozenset(gens)
    if key in memo:
        return memo[key]
    if all(i == j or all(a == 0 or b == 0 for a, b in zip(gens[i], gens[j]))
           for i in range(len(gens)) for j in range(i)):
        out = [1]
        for g in gens:
            f = [0] * (degree(g) + 1)
            f[0], f[-1] = 1, -1
            out = _pmul(out, f)
    else:
        i = _pick_pivot(gens)
        m = gens[i]
        rest = gens[:i] + gens[i + 1:]
        colon = tuple(_minimal_set(mono_div(g, mono_gcd(g, m)) for g in rest))
        shifted = [0] * degree(m) + _numerator(colon, memo)
        out = poly_sub(_numerator(rest, memo), shifted)
    out = _trim(out)
    memo[key] = out
    return out


def hilbert_numerator(M: MonomialIdeal) -> HilbertNumerator:
    """N(t) for R/M via N(M) = N(M - m) - t^deg(m) * N((M - m) : m)."""
    return HilbertNumerator(_numerator(tuple(M.gens), {}), M.n)


# -- Betti support ------------------------------------------------------------

def taylor_support(M: MonomialIdeal) -> set:
    """Distinct (lcm, subset size) pairs over nonempty generator subsets."""
    states = set()
    for g in M.gens:
        new = {(g, 1)}
        for a, s in states:
            new.add((mono_lcm(a, g), s + 1))
        states |= new
    return states


def betti_candidate_degrees(M: MonomialIdeal, kind: str = "ideal") -> set:
    """Superset of the Betti support of M (or R/M), read off the Taylor complex."""
    r = len(M.gens)
    if r > MAX_TAYLOR_GENERATORS:
        raise TooManyGenerators("too many generators (%d > %d)" % (r, MAX_TAYLOR_GENERATORS))
    out = {(s - 1, degree(a)) for a, s in taylor_support(M) if s - 1 <= M.n - 1}
    if kind == "quotient":
        return {(0, 0)} | {(i + 1, j) for i, j in out}
    if kind != "ideal":
        raise ValueError("kind must be 'quotient' or 'ideal'")
    return out


def lcm_lattice(M: MonomialIdeal) -> set:
    """All lcms of nonempty subsets of the generators."""
    out = set()
    for g in M.gens:
        out |= {mono_lcm(a, g) for a in out}
        out.add(g)
    return out
