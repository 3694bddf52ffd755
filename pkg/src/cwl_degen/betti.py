"""Graded Betti numbers from Koszul homology on graded pieces."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .core.polynomial import Polynomial
from .core.ring import mono_mul, variable
from .groebner import Ideal, component_ideal, graded_piece_basis, max_ideal_times
from .linalg import rank_mod_p
from .monomial import (
    MonomialIdeal, hilbert_numerator, lcm_lattice, poly_sub, standard_monomials,
)

QUOTIENT = "quotient"
IDEAL = "ideal"
THREADS_ENV = "CWL_DEGEN_THREADS"


@dataclass(frozen=True)
class ModuleSpec:
    kind: str
    ideal: Ideal

    def __post_init__(self):
        if self.kind not in (QUOTIENT, IDEAL):
            raise ValueError("kind must be 'quotient' or 'ideal'")


def as_spec(x, kind: str = IDEAL) -> ModuleSpec:
    if isinstance(x, ModuleSpec):
        return x
    if isinstance(x, MonomialIdeal):
        x = Ideal.from_monomials(x)
    return ModuleSpec(kind, x)


@dataclass
class BettiTable:
    """Nonzero graded Betti numbers, keyed by (i, j)."""

    kind: str
    entries: dict = field(default_factory=dict)
    p: int = 0

    def __getitem__(self, ij) -> int:
        return self.entries.get(tuple(ij), 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.kind == other.kind and self.entries == other.entries

    def support(self) -> set:
        return set(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("regularity of the zero module is undefined")
        return max(j - i for i, j in self.entries)

    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def euler_polynomial(self) -> list:
        """sum_i (-1)^i sum_j beta_{i,j} t^j as a coefficient list."""
        top = max((j for _, j in self.entries), default=0)
        out = [0] * (top + 1)
        for (i, j), v in self.entries.items():
            out[j] += -v if i % 2 else v
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def shifted(self) -> "BettiTable":
        """Table of R/I from the table of I, or back."""
        if self.kind == IDEAL:
            entries = {(i + 1, j): v for (i, j), v in self.entries.items()}
            entries[(0, 0)] = 1
            return BettiTable(QUOTIENT, entries, self.p)
        entries = {(i - 1, j): v for (i, j), v in self.entries.items() if i > 0}
        return BettiTable(IDEAL, entries, self.p)

    def records(self) -> list:
        return [(i, j, v) for (i, j), v in sorted(self.entries.items())]


class _Pieces:
    """Graded pieces M_e of R/I or I with the multiplication maps x_k: M_e -> M_{e+1}."""

    def __init__(self, spec: ModuleSpec):
        self.spec = spec
        self.ideal = spec.ideal
        self.ring = spec.ideal.ring
        self._basis = {}
        self._mult = {}
        if spec.kind == QUOTIENT:
            self._initial = self.ideal.initial()
            self._nf = {}

    def basis(self, e: int) -> list:
        if e < 0:
            return []
        if e not in self._basis:
            if self.spec.kind == QUOTIENT:
                self._basis[e] = standard_monomials(self._initial, e)
            else:
                self._basis[e] = list(graded_piece_basis(self.ideal, e).rows)
        return self._basis[e]

    def dim(self, e: int) -> int:
        return len(self.basis(e))

    def _image(self, k: int, v, e: int):
        """x_k * v written in the basis of degree e+1."""
        xk = variable(self.ring.n, k)
        if self.spec.kind == QUOTIENT:
            m = mono_mul(v, xk)
            f = self._nf.get(m)
            if f is None:
                f = self.ideal.normal_form(Polynomial.monomial(self.ring, m))
                self._nf[m] = f
            return f.terms
        piece = graded_piece_basis(self.ideal, e + 1)
        return list(zip(piece.pivots, piece.coordinates(v.shift(xk))))

    def mult(self, k: int, e: int) -> np.ndarray:
        key = (k, e)
        if key not in self._mult:
            src, dst = self.basis(e), self.basis(e + 1)
            A = np.zeros((len(dst), len(src)), dtype=np.int64)
            if src and dst:
                if self.spec.kind == QUOTIENT:
                    index = {m: r for r, m in enumerate(dst)}
                    for c, v in enumerate(src):
                        for m, a in self._image(k, v, e):
                            A[index[m], c] = a
                else:
                    for c, v in enumerate(src):
                        for r, (_, a) in enumerate(self._image(k, v, e)):
                            A[r, c] = a
            self._mult[key] = A
        return self._mult[key]


class KoszulComplex:
    """K(x_1..x_n) tensored with R/I or I, one internal degree at a time.

    Basis of K_{i,j}: pairs (S, b) with S an i-subset of variables and b a
    basis vector of M_{j-i}. d(e_S (x) v) = sum_k (-1)^k e_{S - s_k} (x) x_{s_k} v
    (k counted from 0).
    """

    def __init__(self, spec: ModuleSpec):
        if not spec.ideal.is_homogeneous():
            raise ValueError("Koszul homology needs a homogeneous ideal")
        self.spec = spec
        self.n = spec.ideal.ring.n
        self.p = spec.ideal.ring.p
        self.pieces = _Pieces(spec)
        self._ranks = {}

    def dim(self, i: int, j: int) -> int:
        if i < 0 or i > self.n:
            return 0
        return comb(self.n, i) * self.pieces.dim(j - i)

    def differential(self, i: int, j: int) -> np.ndarray:
        """Matrix of d_i: K_{i,j} -> K_{i-1,j}."""
        rows, cols = self.dim(i - 1, j), self.dim(i, j)
        A = np.zeros((rows, cols), dtype=np.int64)
        if rows == 0 or cols == 0:
            return A
        e = j - i
        src = self.pieces.dim(e)
        dst = self.pieces.dim(e + 1)
        tindex = {T: t for t, T in enumerate(combinations(range(self.n), i - 1))}
        for s, S in enumerate(combinations(range(self.n), i)):
            for k, var in enumerate(S):
                T = S[:k] + S[k + 1:]
                t = tindex[T]
                block = self.pieces.mult(var, e)
                A[t * dst:(t + 1) * dst, s * src:(s + 1) * src] = block if k % 2 == 0 else -block
        return A

    def rank(self, i: int, j: int) -> int:
        if i <= 0 or i > self.n:
            return 0
        key = (i, j)
        if key not in self._ranks:
            self._ranks[key] = rank_mod_p(self.differential(i, j), self.p)
        return self._ranks[key]

    def betti(self, i: int, j: int) -> int:
        return self.dim(i, j) - self.rank(i, j) - self.rank(i + 1, j)


class MultigradedKoszul:
    """Koszul homology of R/M or M for a monomial ideal M, one multidegree at a time.

    In multidegree a the complex has basis e_S for the subsets S of supp(a)
    with x^(a - S) a standard monomial (quotient) or in M (ideal). Betti
    multidegrees are lcms of generators, so summing over the lcm lattice
    (plus a = 0 for the quotient) gives the graded numbers.
    """

    def __init__(self, spec: ModuleSpec):
        self.kind = spec.kind
        self.M = spec.ideal.initial()
        self.n = self.M.n
        self.p = self.M.ring.p
        lattice = lcm_lattice(self.M)
        if self.kind == QUOTIENT and not self.M.is_unit():
            lattice.add(self.M.ring.one())
        self.by_degree = {}
        for a in lattice:
            self.by_degree.setdefault(sum(a), []).append(a)
        self._cells = {}

    def _ok(self, a, S) -> bool:
        m = list(a)
        for k in S:
            m[k] -= 1
        inside = self.M.contains(m)
        return inside if self.kind == IDEAL else not inside

    def _faces(self, a, i) -> list:
        supp = [k for k, e in enumerate(a) if e]
        if i < 0 or i > len(supp):
            return []
        return [S for S in combinations(supp, i) if self._ok(a, S)]

    def _rank(self, a, i) -> int:
        src, dst = self._faces(a, i), self._faces(a, i - 1)
        if not src or not dst:
            return 0
        index = {T: t for t, T in enumerate(dst)}
        A = np.zeros((len(dst), len(src)), dtype=np.int64)
        for s, S in enumerate(src):
            for k in range(len(S)):
                t = index.get(S[:k] + S[k + 1:])
                if t is not None:
                    A[t, s] = 1 if k % 2 == 0 else -1
        return rank_mod_p(A, self.p)

    def betti_multidegree(self, i: int, a) -> int:
        key = (i, tuple(a))
        if key not in self._cells:
            self._cells[key] = len(self._faces(a, i)) - self._rank(a, i) - self._rank(a, i + 1)
        return self._cells[key]

    def betti(self, i: int, j: int) -> int:
        return sum(self.betti_multidegree(i, a) for a in self.by_degree.get(j, ()))

    def support(self) -> set:
        out = set()
        for j, alphas in self.by_degree.items():
            for a in alphas:
                for i in range(sum(1 for e in a if e) + 1):
                    if self.betti_multidegree(i, a):
                        out.add((i, j))
        return out


def koszul_complex(spec: ModuleSpec, multigraded: bool = None):
    if multigraded is None:
        multigraded = spec.ideal.is_monomial()
    key = ("koszul", spec.kind, multigraded)
    cache = spec.ideal.cache
    if key not in cache:
        cache[key] = MultigradedKoszul(spec) if multigraded else KoszulComplex(spec)
    return cache[key]


def koszul_betti(spec: ModuleSpec, i: int, j: int, multigraded: bool = None) -> int:
    """beta_{i,j} as a Koszul homology dimension.

    ``multigraded=None`` picks the multidegree splitting for monomial ideals
    and graded pieces otherwise; pass a bool to force one route.
    """
    n = spec.ideal.ring.n
    if not 0 <= i <= n:
        raise ValueError("homological index %d outside [0, %d]" % (i, n))
    if j < 0:
        raise ValueError("internal degree must be nonnegative")
    if not spec.ideal.is_homogeneous():
        raise ValueError("Betti numbers need a homogeneous ideal")
    return koszul_complex(spec, multigraded).betti(i, j)


def candidate_degrees(spec: ModuleSpec) -> set:
    """Cells that can carry nonzero Betti numbers.

    Monomial ideals: cells with a nonzero multigraded Betti number over the
    lcm lattice. Otherwise the support of the
    initial ideal's table, by upper semicontinuity.
    """
    I = spec.ideal
    if I.is_zero():
        return {(0, 0)} if spec.kind == QUOTIENT else set()
    if I.is_monomial():
        return koszul_complex(spec, True).support()
    initial = ModuleSpec(spec.kind, Ideal.from_monomials(I.initial()))
    return betti_table(initial).support()


def _workers(workers) -> int:
    if workers is None:
        workers = int(os.environ.get(THREADS_ENV, "1") or 1)
    return max(1, workers)


def betti_table(spec, kind: str = None, workers: int = None) -> BettiTable:
    """Graded Betti table of R/I or I, evaluated on a finite candidate set."""
    spec = as_spec(spec, kind or IDEAL) if not isinstance(spec, ModuleSpec) else spec
    if kind is not None and spec.kind != kind:
        spec = ModuleSpec(kind, spec.ideal)
    key = ("table", spec.kind)
    cache = spec.ideal.cache
    if key in cache:
        return cache[key]
    cells = sorted(candidate_degrees(spec))
    K = koszul_complex(spec)
    n = _workers(workers)
    if n > 1 and len(cells) > 1 and isinstance(K, KoszulComplex):
        # warm the shared caches sequentially; cells then only read them
        for i, j in cells:
            for e in (j - i - 1, j - i, j - i + 1):
                K.pieces.basis(e)
        with ThreadPoolExecutor(max_workers=n) as ex:
            values = list(ex.map(lambda c: K.betti(*c), cells))
    else:
        values = [K.betti(i, j) for i, j in cells]
    table = BettiTable(spec.kind, {c: v for c, v in zip(cells, values) if v}, spec.ideal.ring.p)
    cache[key] = table
    return table


def regularity(spec, kind: str = IDEAL) -> int:
    spec = as_spec(spec, kind)
    if spec.ideal.is_zero():
        raise ValueError("regularity of the zero ideal is undefined")
    return betti_table(spec).regularity()


def minimal_generator_counts(I: Ideal) -> dict:
    """beta_{0,j}(I) = dim (I / m I)_j by graded linear algebra."""
    if I.is_zero():
        return {}
    degs = I.generator_degrees()
    out = {}
    for j in range(degs[0], degs[-1] + 1):
        piece = graded_piece_basis(I, j)
        if not len(piece):
            continue
        below = graded_piece_basis(I, j - 1) if j > 0 else None
        rows = []
        if below is not None:
            for v in below.rows:
                for k in range(I.ring.n):
                    rows.append(piece.coordinates(v.shift(variable(I.ring.n, k))))
        r = rank_mod_p(np.array(rows, dtype=np.int64), I.ring.p) if rows else 0
        if len(piece) - r:
            out[j] = len(piece) - r
    return out


def beta0(I) -> int:
    """Number of minimal generators."""
    if isinstance(I, MonomialIdeal):
        return len(I)
    return sum(minimal_generator_counts(I).values())


def has_linear_resolution(I: Ideal, d: int) -> bool:
    if isinstance(I, MonomialIdeal):
        I = Ideal.from_monomials(I)
    if I.is_zero():
        return True
    if set(minimal_generator_counts(I)) != {d}:
        return False
    return all(j - i == d for i, j in betti_table(I).support())


@dataclass
class CWLReport:
    componentwise_linear: bool
    degrees: list  # (d, linear?) pairs

    def __bool__(self):
        return self.componentwise_linear

    def failing_degrees(self) -> list:
        return [d for d, ok in self.degrees if not ok]


def is_componentwise_linear(I) -> CWLReport:
    """Checks I_<d> for d between the smallest and largest generator degree.

    Above the largest degree I_<d> = m I_<d-1>, which inherits linearity;
    below the smallest, I_<d> = 0.
    """
    if isinstance(I, MonomialIdeal):
        I = Ideal.from_monomials(I)
    counts = minimal_generator_counts(I)
    if not counts:
        return CWLReport(True, [])
    verdicts = []
    for d in range(min(counts), max(counts) + 1):
        verdicts.append((d, has_linear_resolution(component_ideal(I, d), d)))
    return CWLReport(all(ok for _, ok in verdicts), verdicts)


@dataclass
class HHReport:
    precondition: bool
    holds: bool
    mismatches: list  # (i, j, lhs, rhs)


def hh_identity_check(I) -> HHReport:
    """beta_{i,i+j}(I) = beta_i(I_<j>) - beta_i(m I_<j-1>) for componentwise linear I."""
    if isinstance(I, MonomialIdeal):
        I = Ideal.from_monomials(I)
    if not is_componentwise_linear(I):
        return HHReport(False, False, [])
    counts = minimal_generator_counts(I)
    if not counts:
        return HHReport(True, True, [])
    n = I.ring.n
    table = betti_table(I)
    lo, hi = min(counts), max(counts) + 1
    mismatches = []
    for j in range(lo, hi + 1):
        comp = betti_table(component_ideal(I, j))
        if j - 1 >= lo:
            prev = betti_table(max_ideal_times(component_ideal(I, j - 1)))
        else:
            prev = BettiTable(IDEAL)
        for i in range(n):
            lhs = table[(i, i + j)]
            rhs = comp.total(i) - prev.total(i)
            if lhs != rhs:
                mismatches.append((i, j, lhs, rhs))
    outside = [(i, j) for i, j in table.support() if not lo <= j - i <= hi]
    mismatches += [(i, j - i, table[(i, j)], 0) for i, j in outside]
    return HHReport(True, not mismatches, mismatches)


def hilbert_betti_consistency(spec, kind: str = IDEAL) -> bool:
    """Alternating Betti sum against the Hilbert numerator of R/in(I)."""
    spec = as_spec(spec, kind)
    N = list(hilbert_numerator(spec.ideal.initial()).coeffs)
    expected = N if spec.kind == QUOTIENT else poly_sub([1], N)
    return poly_sub(betti_table(spec).euler_polynomial(), expected) == [0]
