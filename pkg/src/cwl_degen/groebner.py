"""Normal forms, Buchberger's algorithm and graded pieces of ideals."""

from __future__ import annotations

import heapq
import threading
from dataclasses import dataclass
from itertools import count

import numpy as np

from .core.polynomial import Polynomial, RingMismatch
from .core.ring import (
    RingContext, coprime, degree, divides, mono_div, mono_lcm, mono_mul,
    monomials_of_degree,
)
from .linalg import rref_mod_p
from .monomial import MonomialIdeal, standard_monomials


@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingContext
    elements: tuple
    reduced: bool = True

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self) -> list:
        return [g.lm for g in self.elements]

    def __str__(self):
        return "\n".join(str(g) for g in self.elements)


def _neg_key(ring):
    key = ring.order.key
    return lambda m: tuple(-x for x in key(m))


def _reduce(f: Polynomial, divisors, full: bool = True) -> Polynomial:
    """Reduce f by the monic polynomials in ``divisors``.

    The largest reducible term is always treated next, using the first
    divisor in sequence order whose leading monomial divides it.
    """
    ring = f.ring
    if not f.terms or not divisors:
        return f
    p = ring.p
    nk = _neg_key(ring)
    leads = [(g.lm, g.terms[1:]) for g in divisors]
    work = dict(f.terms)
    heap = [(nk(m), m) for m in work]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        for lm, tail in leads:
            if divides(lm, m):
                u = mono_div(m, lm)
                for e, gc in tail:
                    ne = mono_mul(e, u)
                    old = work.get(ne)
                    new = ((old or 0) - c * gc) % p
                    if new:
                        work[ne] = new
                        if old is None:
                            heapq.heappush(heap, (nk(ne), ne))
                    elif old is not None:
                        del work[ne]
                break
        else:
            rem[m] = c
            if not full:
                rem.update(work)
                break
    return Polynomial.from_dict(ring, rem)


def normal_form(f: Polynomial, G) -> Polynomial:
    """Fully reduced remainder of f modulo G (a GroebnerBasis or list)."""
    elements = G.elements if isinstance(G, GroebnerBasis) else [g.monic() for g in G if g]
    for g in elements:
        if g.ring != f.ring:
            raise RingMismatch("normal form across different rings")
    return _reduce(f, elements)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    if not f or not g:
        raise ValueError("S-polynomial of the zero polynomial")
    if f.ring != g.ring:
        raise RingMismatch("S-polynomial across different rings")
    p = f.ring.p
    L = mono_lcm(f.lm, g.lm)
    a = f.shift(mono_div(L, f.lm), pow(f.lc, p - 2, p))
    b = g.shift(mono_div(L, g.lm), pow(g.lc, p - 2, p))
    return a - b


def buchberger(gens, ring: RingContext = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Normal selection strategy (smallest lcm first); input generators are
    queued at their own leading degree and reduced on arrival. Pairs are
    skipped by the coprime-leading-monomial and chain criteria.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("generator from a different ring")
    nk = _neg_key(ring)
    G = []
    pending = set()
    queue = []
    tick = count()

    for f in gens:
        if f:
            heapq.heappush(queue, (degree(f.lm), nk(f.lm), next(tick), None, f.monic()))

    def add(h):
        k = len(G)
        G.append(h)
        for i in range(k):
            pending.add((i, k))
            L = mono_lcm(G[i].lm, h.lm)
            heapq.heappush(queue, (degree(L), nk(L), next(tick), (i, k), None))

    while queue:
        _, _, _, pair, f = heapq.heappop(queue)
        if pair is not None:
            i, j = pair
            pending.discard(pair)
            gi, gj = G[i], G[j]
            if coprime(gi.lm, gj.lm):
                continue
            L = mono_lcm(gi.lm, gj.lm)
            if any(k != i and k != j and divides(G[k].lm, L)
                   and (min(i, k), max(i, k)) not in pending
                   and (min(j, k), max(j, k)) not in pending
                   for k in range(len(G))):
                continue
            f = s_polynomial(gi, gj)
        h = _reduce(f, G)
        if h:
            add(h.monic())
    return GroebnerBasis(ring, tuple(_interreduce(G, ring)), True)


def _interreduce(G, ring) -> list:
    keep = []
    for g in sorted(G, key=lambda g: ring.order.key(g.lm)):
        if not any(divides(h.lm, g.lm) for h in keep):
            keep.append(g)
    out = []
    for g in keep:
        others = [h for h in keep if h is not g]
        out.append(_reduce(g, others).monic())
    out.sort(key=lambda g: ring.order.key(g.lm), reverse=True)
    return out


def initial_ideal(G: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(G.ring, G.leading_monomials(), minimal=G.reduced)


# -- ideals -----------------------------------------------------------------

class Ideal:
    """An ideal given by generators, with a lazily computed reduced GB."""

    def __init__(self, ring: RingContext, gens=()):
        gens = [g for g in gens if g]
        for g in gens:
            if g.ring != ring:
                raise RingMismatch("generator from a different ring")
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = None
        self._lock = threading.Lock()
        self.cache = {}

    @classmethod
    def from_monomials(cls, M: MonomialIdeal) -> "Ideal":
        return cls(M.ring, [Polynomial.monomial(M.ring, g) for g in M.gens])

    @property
    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = buchberger(self.generators, self.ring)
        return self._gb

    def initial(self) -> MonomialIdeal:
        return initial_ideal(self.gb)

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gb)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.gb)

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def generator_degrees(self) -> list:
        return sorted({g.total_degree() for g in self.generators})

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(str(g) for g in self.generators)


def ideal_equality(A: Ideal, B: Ideal) -> bool:
    if A.ring != B.ring:
        raise RingMismatch("ideals live in different rings")
    return A.gb.elements == B.gb.elements


@dataclass(frozen=True)
class GradedPieceBasis:
    """Reduced row echelon basis of I_d; ``pivots`` are the leading monomials."""

    ring: RingContext
    degree: int
    rows: tuple
    pivots: tuple

    def __len__(self):
        return len(self.rows)

    def coordinates(self, f: Polynomial) -> list:
        """Coordinates of an element of I_d in this basis."""
        d = dict(f.terms)
        return [d.get(m, 0) for m in self.pivots]


def graded_piece_basis(I: Ideal, d: int) -> GradedPieceBasis:
    """Echelon basis of the span of {u*g : g in GB, deg(u*g) = d}."""
    cache = I.cache.setdefault("pieces", {})
    if d in cache:
        return cache[d]
    ring = I.ring
    rows = []
    for g in I.gb:
        k = d - g.total_degree()
        if k < 0:
            continue
        if not g.is_homogeneous():
            raise ValueError("graded pieces need a homogeneous ideal")
        for u in monomials_of_degree(ring.n, k):
            rows.append(g.shift(u))
    cols = ring.monomials(d)
    if rows:
        index = {m: c for c, m in enumerate(cols)}
        A = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for r, f in enumerate(rows):
            for m, c in f.terms:
                A[r, index[m]] = c
        R, piv = rref_mod_p(A, ring.p)
        basis = []
        for r in range(R.shape[0]):
            nz = np.flatnonzero(R[r])
            basis.append(Polynomial(ring, [(cols[c], int(R[r, c])) for c in nz]))
        out = GradedPieceBasis(ring, d, tuple(basis), tuple(cols[c] for c in piv))
    else:
        out = GradedPieceBasis(ring, d, (), ())
    cache[d] = out
    return out


def max_ideal_times(I: Ideal, d: int = 1) -> Ideal:
    """m^d * I, generated by products of degree-d monomials with generators."""
    us = monomials_of_degree(I.ring.n, d)
    return Ideal(I.ring, [g.shift(u) for g in I.generators for u in us])


def component_ideal(I: Ideal, d: int) -> Ideal:
    """I_<d>: the ideal generated by the degree-d elements of I."""
    return Ideal(I.ring, graded_piece_basis(I, d).rows)


def ideal_up_to_degree(I: Ideal, d: int) -> Ideal:
    """I_{<=d}, generated by the homogeneous generators of degree <= d.

    For homogeneous generators this equals the ideal generated by all of
    I_0, ..., I_d, since I_e is spanned by multiples of generators of
    degree <= e.
    """
    if not I.is_homogeneous():
        raise ValueError("truncation needs a homogeneous ideal")
    return Ideal(I.ring, [g for g in I.generators if g.total_degree() <= d])


def dim_ideal_piece(I: Ideal, d: int) -> int:
    """dim_K I_d via the initial ideal's standard monomials."""
    return len(I.ring.monomials(d)) - len(standard_monomials(I.initial(), d))
