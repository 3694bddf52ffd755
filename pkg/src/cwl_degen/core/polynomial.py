"""Sparse polynomials over GF(p)."""

from __future__ import annotations

from .ring import RingContext, Monomial, degree, inverse, mono_mul


class RingMismatch(ValueError):
    pass


class Polynomial:
    """Immutable sparse polynomial.

    ``terms`` is a tuple of ``(monomial, coefficient)`` pairs, coefficients in
    ``[1, p)``, strictly decreasing in the ring's order. The empty tuple is 0.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingContext, terms=()):
        self.ring = ring
        self.terms = tuple(terms)
        self._hash = None

    @classmethod
    def from_dict(cls, ring: RingContext, coeffs: dict) -> "Polynomial":
        p = ring.p
        items = [(m, c % p) for m, c in coeffs.items() if c % p]
        items.sort(key=lambda t: ring.order.key(t[0]), reverse=True)
        return cls(ring, items)

    @classmethod
    def monomial(cls, ring: RingContext, m: Monomial, c: int = 1) -> "Polynomial":
        c %= ring.p
        return cls(ring, [(tuple(m), c)] if c else [])

    @classmethod
    def constant(cls, ring: RingContext, c: int) -> "Polynomial":
        return cls.monomial(ring, ring.one(), c)

    @classmethod
    def zero(cls, ring: RingContext) -> "Polynomial":
        return cls(ring)

    # -- basic accessors ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def to_dict(self) -> dict:
        return dict(self.terms)

    def leading_term(self):
        """(coefficient, monomial) of the order-largest term."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        m, c = self.terms[0]
        return c, m

    @property
    def lm(self) -> Monomial:
        return self.leading_term()[1]

    @property
    def lc(self) -> int:
        return self.leading_term()[0]

    def monomials(self):
        return [m for m, _ in self.terms]

    def coefficient(self, m: Monomial) -> int:
        for mm, c in self.terms:
            if mm == m:
                return c
        return 0

    def total_degree(self) -> int:
        return max((degree(m) for m, _ in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({degree(m) for m, _ in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatch("polynomials live in different rings")

    def _coerce(self, other):
        if isinstance(other, int):
            return Polynomial.constant(self.ring, other)
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self.terms)
        for m, c in other.terms:
            d[m] = d.get(m, 0) + c
        return Polynomial.from_dict(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, [(m, p - c) for m, c in self.terms])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.p
        c %= p
        if c == 0:
            return Polynomial.zero(self.ring)
        return Polynomial(self.ring, [(m, c * a % p) for m, a in self.terms])

    def shift(self, u: Monomial, c: int = 1) -> "Polynomial":
        """c * x^u * self; multiplication by a monomial keeps the term order."""
        p = self.ring.p
        c %= p
        if c == 0:
            return Polynomial.zero(self.ring)
        return Polynomial(self.ring, [(mono_mul(m, u), c * a % p) for m, a in self.terms])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        d = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                d[m] = (d.get(m, 0) + c1 * c2) % p
        return Polynomial.from_dict(self.ring, d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(inverse(self.lc, self.ring.p))

    def reduction_step(self, c: int, u: Monomial, g: "Polynomial") -> "Polynomial":
        """self - c * x^u * g."""
        self._check(g)
        return self - g.shift(u, c)

    def with_ring(self, ring: RingContext) -> "Polynomial":
        """Re-sort the same terms under another order on the same variables."""
        if ring.n != self.ring.n or ring.p != self.ring.p:
            raise RingMismatch("target ring has a different field or variable count")
        return Polynomial.from_dict(ring, dict(self.terms))

    # -- comparisons / printing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def __repr__(self):
        return "Polynomial(%s)" % self

    def __str__(self):
        return format_polynomial(self)


def format_polynomial(f: Polynomial) -> str:
    """Input-grammar rendering; coefficients above p/2 print as negatives."""
    if not f.terms:
        return "0"
    p = f.ring.p
    out = []
    for i, (m, c) in enumerate(f.terms):
        neg = c > p // 2
        a = p - c if neg else c
        mono = f.ring.format_monomial(m)
        if mono == "1":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = "%d*%s" % (a, mono)
        if i == 0:
            out.append("-" + body if neg else body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)
