"""Prime fields, monomials and monomial orders.

Monomials are plain tuples of nonnegative exponents; the order object turns
an exponent tuple into a sort key so that comparing keys compares monomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Optional, Sequence

MAX_VARS = 16
DEFAULT_CHARACTERISTIC = 101

Monomial = tuple

LESS, EQUAL, GREATER = -1, 0, 1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    q = 3
    while q * q <= p:
        if p % q == 0:
            return False
        q += 2
    return True


def inverse(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod %d" % p)
    return pow(a, p - 2, p)


# -- monomial helpers -------------------------------------------------------

def degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    """True if a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def variable(n: int, k: int) -> Monomial:
    return tuple(1 if i == k else 0 for i in range(n))


def monomials_of_degree(n: int, d: int) -> list:
    """All exponent tuples of total degree d in n variables (unordered)."""
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    return out


# -- orders -----------------------------------------------------------------

_BASIC = ("lex", "grlex", "grevlex")


def _basic_key(variant: str, m: Monomial):
    if variant == "lex":
        return m
    if variant == "grlex":
        return (sum(m),) + m
    # grevlex: higher degree wins, then the smaller exponent in the last
    # differing variable wins.
    return (sum(m),) + tuple(-x for x in reversed(m))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order. Larger ``key`` means larger monomial."""

    variant: str = "grevlex"
    weights: Optional[tuple] = None
    tiebreak: Optional[str] = None

    def __post_init__(self):
        if self.variant in _BASIC:
            if self.weights is not None or self.tiebreak is not None:
                raise ValueError("only weight orders take weights/tiebreak")
        elif self.variant == "weight":
            if not self.weights or any(int(w) < 1 for w in self.weights):
                raise ValueError("weight vector entries must be positive integers")
            if self.tiebreak not in _BASIC:
                raise ValueError("weight order needs a tiebreak in %s" % (_BASIC,))
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        else:
            raise ValueError("unknown monomial order %r" % self.variant)

    @classmethod
    def weighted(cls, weights: Sequence[int], tiebreak: str = "grevlex") -> "MonomialOrder":
        return cls("weight", tuple(weights), tiebreak)

    def key(self, m: Monomial):
        if self.variant == "weight":
            w = sum(a * b for a, b in zip(self.weights, m))
            return (w,) + _basic_key(self.tiebreak, m)
        return _basic_key(self.variant, m)

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return GREATER if ka > kb else LESS if ka < kb else EQUAL

    @property
    def is_graded(self) -> bool:
        if self.variant in ("grlex", "grevlex"):
            return True
        if self.variant == "weight":
            return len(set(self.weights)) == 1
        return False

    def __str__(self):
        if self.variant == "weight":
            return "weight %s %s" % (",".join(map(str, self.weights)), self.tiebreak)
        return self.variant


@dataclass(frozen=True)
class RingContext:
    """GF(p)[names] with a monomial order; the first name is the largest variable."""

    p: int = DEFAULT_CHARACTERISTIC
    names: tuple = ("x", "y", "z")
    order: MonomialOrder = field(default_factory=MonomialOrder)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not (2 <= self.p < 2 ** 31) or not is_prime(self.p):
            raise ValueError("characteristic %d is not a prime below 2^31" % self.p)
        if not 1 <= len(self.names) <= MAX_VARS:
            raise ValueError("need between 1 and %d variables" % MAX_VARS)
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        if self.order.weights is not None and len(self.order.weights) != len(self.names):
            raise ValueError("weight vector length does not match variable count")

    @property
    def n(self) -> int:
        return len(self.names)

    def one(self) -> Monomial:
        return (0,) * self.n

    def variable(self, k: int) -> Monomial:
        return variable(self.n, k)

    def key(self, m: Monomial):
        return self.order.key(m)

    def sorted_desc(self, monos) -> list:
        return sorted(monos, key=self.order.key, reverse=True)

    def monomials(self, d: int) -> list:
        """Degree-d monomials, decreasing in the ring order."""
        return self.sorted_desc(monomials_of_degree(self.n, d))

    def with_order(self, order: MonomialOrder) -> "RingContext":
        return RingContext(self.p, self.names, order)

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append("%s^%d" % (name, e))
        return "*".join(parts) if parts else "1"

    def header(self) -> str:
        """The ring declaration line in input-file syntax."""
        return "ring %d [%s] %s" % (self.p, ",".join(self.names), self.order)
