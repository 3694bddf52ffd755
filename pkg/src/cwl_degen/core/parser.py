"""Reader for ring/ideal text files.

    ring 101 [a,b,c] grevlex
    I = a*b - c^2, 3*b^2   # comment
    J = a^2 + \\
        b^2

The order is ``lex``, ``grlex``, ``grevlex`` or ``weight w1,...,wn <tiebreak>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .polynomial import Polynomial
from .ring import MonomialOrder, RingContext, is_prime


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__("line %d, column %d: %s" % (line, col, message))
        self.line = line
        self.col = col


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9']*)|(.))")


@dataclass
class _Tok:
    kind: str  # "int", "name", "sym", "end"
    text: str
    line: int
    col: int


def _logical_lines(text: str):
    """Yield (chars, positions) for each statement, joining '\\' continuations."""
    chars, pos = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        cont = body.endswith("\\")
        if cont:
            body = body[:-1]
        for col, ch in enumerate(body, start=1):
            chars.append(ch)
            pos.append((lineno, col))
        if cont:
            chars.append(" ")
            pos.append((lineno, len(body) + 1))
            continue
        if "".join(chars).strip():
            yield "".join(chars), pos, lineno
        chars, pos = [], []
    if "".join(chars).strip():
        yield "".join(chars), pos, lineno


def _tokenize(s: str, pos, lastline: int):
    toks = []
    i = 0
    while i < len(s):
        mo = _TOKEN.match(s, i)
        if mo is None or mo.end() == i:
            break
        start = mo.start(mo.lastindex)
        line, col = pos[start]
        if mo.group(1):
            toks.append(_Tok("int", mo.group(1), line, col))
        elif mo.group(2):
            toks.append(_Tok("name", mo.group(2), line, col))
        elif not mo.group(3).isspace():
            toks.append(_Tok("sym", mo.group(3), line, col))
        i = mo.end()
    end_line, end_col = (pos[-1][0], pos[-1][1] + 1) if pos else (lastline, 1)
    toks.append(_Tok("end", "", end_line, end_col))
    return toks


class _Stream:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        if t.kind != "end":
            self.i += 1
        return t

    def accept(self, sym: str) -> bool:
        t = self.peek()
        if t.kind == "sym" and t.text == sym:
            self.i += 1
            return True
        return False

    def expect(self, sym: str) -> _Tok:
        t = self.peek()
        if not (t.kind == "sym" and t.text == sym):
            raise ParseError("expected %r, found %s" % (sym, _describe(t)), t.line, t.col)
        return self.next()

    def expect_kind(self, kind: str, what: str) -> _Tok:
        t = self.peek()
        if t.kind != kind:
            raise ParseError("expected %s, found %s" % (what, _describe(t)), t.line, t.col)
        return self.next()

    def expect_end(self):
        t = self.peek()
        if t.kind != "end":
            raise ParseError("unexpected %s" % _describe(t), t.line, t.col)


def _describe(t: _Tok) -> str:
    return "end of line" if t.kind == "end" else repr(t.text)


def _parse_ring(ts: _Stream) -> RingContext:
    t = ts.expect_kind("int", "characteristic")
    p = int(t.text)
    if not (2 <= p < 2 ** 31 and is_prime(p)):
        raise ParseError("characteristic %d is not a prime below 2^31" % p, t.line, t.col)
    ts.expect("[")
    names = []
    while True:
        nt = ts.expect_kind("name", "variable name")
        if nt.text in names:
            raise ParseError("duplicate variable %r" % nt.text, nt.line, nt.col)
        names.append(nt.text)
        if ts.accept("]"):
            break
        ts.expect(",")
    ot = ts.expect_kind("name", "monomial order")
    if ot.text in ("lex", "grlex", "grevlex"):
        order = MonomialOrder(ot.text)
    elif ot.text == "weight":
        closer = "]" if ts.accept("[") else ")" if ts.accept("(") else None
        weights = []
        while True:
            wt = ts.expect_kind("int", "weight")
            if int(wt.text) < 1:
                raise ParseError("weights must be positive", wt.line, wt.col)
            weights.append(int(wt.text))
            if not ts.accept(","):
                break
        if closer:
            ts.expect(closer)
        if len(weights) != len(names):
            raise ParseError("expected %d weights, got %d" % (len(names), len(weights)), ot.line, ot.col)
        tb = ts.expect_kind("name", "tiebreak order")
        if tb.text not in ("lex", "grlex", "grevlex"):
            raise ParseError("unknown tiebreak order %r" % tb.text, tb.line, tb.col)
        order = MonomialOrder.weighted(weights, tb.text)
    else:
        raise ParseError("unknown monomial order %r" % ot.text, ot.line, ot.col)
    ts.expect_end()
    if len(names) > 16:
        raise ParseError("at most 16 variables are supported", t.line, t.col)
    return RingContext(p, tuple(names), order)


def _parse_factor(ts: _Stream, ring: RingContext, index: dict) -> Polynomial:
    t = ts.next()
    if t.kind == "int":
        return Polynomial.constant(ring, int(t.text))
    if t.kind == "name":
        if t.text not in index:
            raise ParseError("unknown variable %r" % t.text, t.line, t.col)
        e = 1
        if ts.accept("^"):
            e = int(ts.expect_kind("int", "exponent").text)
        m = [0] * ring.n
        m[index[t.text]] = e
        return Polynomial.monomial(ring, tuple(m))
    if t.kind == "sym" and t.text == "(":
        f = _parse_poly(ts, ring, index)
        ts.expect(")")
        if ts.accept("^"):
            f = f ** int(ts.expect_kind("int", "exponent").text)
        return f
    raise ParseError("expected a variable or integer, found %s" % _describe(t), t.line, t.col)


def _parse_term(ts: _Stream, ring, index) -> Polynomial:
    f = _parse_factor(ts, ring, index)
    while ts.accept("*"):
        f = f * _parse_factor(ts, ring, index)
    return f


def _parse_poly(ts: _Stream, ring, index) -> Polynomial:
    sign = -1 if ts.accept("-") else 1
    if sign == 1:
        ts.accept("+")
    f = _parse_term(ts, ring, index).scale(sign)
    while True:
        if ts.accept("+"):
            f = f + _parse_term(ts, ring, index)
        elif ts.accept("-"):
            f = f - _parse_term(ts, ring, index)
        else:
            return f


def parse_polynomial(text: str, ring: RingContext) -> Polynomial:
    pos = [(1, i + 1) for i in range(len(text))]
    ts = _Stream(_tokenize(text, pos, 1))
    index = {name: k for k, name in enumerate(ring.names)}
    f = _parse_poly(ts, ring, index)
    ts.expect_end()
    return f


def parse_input(text: str):
    """Parse a whole file. Returns ``(ring, {name: [Polynomial, ...]})``."""
    ring = None
    ideals = {}
    index = {}
    for s, pos, lastline in _logical_lines(text):
        ts = _Stream(_tokenize(s, pos, lastline))
        head = ts.next()
        if head.kind == "name" and head.text == "ring":
            if ring is not None:
                raise ParseError("ring declared twice", head.line, head.col)
            ring = _parse_ring(ts)
            index = {name: k for k, name in enumerate(ring.names)}
            continue
        if head.kind != "name":
            raise ParseError("expected 'ring' or an ideal name, found %s" % _describe(head), head.line, head.col)
        if ring is None:
            raise ParseError("ideal %r defined before the ring line" % head.text, head.line, head.col)
        ts.expect("=")
        if head.text in ideals:
            raise ParseError("duplicate ideal name %r" % head.text, head.line, head.col)
        gens = [_parse_poly(ts, ring, index)]
        while ts.accept(","):
            gens.append(_parse_poly(ts, ring, index))
        ts.expect_end()
        ideals[head.text] = gens
    if ring is None:
        raise ParseError("missing 'ring' declaration", 1, 1)
    return ring, ideals


def format_input(ring: RingContext, ideals: dict) -> str:
    lines = [ring.header()]
    for name, gens in ideals.items():
        lines.append("%s = %s" % (name, ", ".join(str(g) for g in gens) or "0"))
    return "\n".join(lines) + "\n"
