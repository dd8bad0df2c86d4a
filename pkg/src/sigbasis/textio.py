"""Reading and writing polynomial systems.

File format::

    # comment
    vars: X, Y, Z
    X^2*Z^3 + 3*X^2*Y
    X*Y*Z + 2*Y^2

Without a ``vars:`` header, variables are registered in order of first
appearance.  Expression precedence, tightest first: ``^`` (natural
exponent), unary ``-``, ``*``, binary ``+``/``-``.  Juxtaposition is not
multiplication.  Coefficients are integers or ``a/b`` literals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .coeff import format_rational, rat
from .order import PowerProduct, pp_var
from .poly import Polynomial, Ring, poly_add, poly_mul

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")
_HEADER_RE = re.compile(r"^\s*vars\s*:(.*)$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass
class SystemFile:
    variables: List[str]
    polynomials: List[Polynomial]
    ring: Ring


def _tokenize(text: str, line: int) -> List[Tuple[str, str, int]]:
    """Split ``text`` into (kind, value, column) triples; kinds: num, id, op, end."""
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        num, ident, other = m.groups()
        start = m.start(m.lastindex) if m.lastindex else pos
        if num is not None:
            tokens.append(("num", num, start + 1))
        elif ident is not None:
            tokens.append(("id", ident, start + 1))
        elif other is not None:
            if other not in "+-*/^()":
                raise ParseError(f"unexpected character {other!r}", line, start + 1)
            tokens.append(("op", other, start + 1))
        else:
            break
        pos = m.end()
    tokens.append(("end", "", n + 1))
    return tokens


class _Parser:
    def __init__(self, tokens, ring: Ring, line: int):
        self.toks = tokens
        self.i = 0
        self.ring = ring
        self.line = line
        self.index = {name: k for k, name in enumerate(ring.names)}

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok[2])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            tok = self.peek()
            if tok[1] == ")":
                self.error("unbalanced parenthesis")
            self.error(f"unexpected token {tok[1]!r} (use '*' between factors)")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.next()[1]
            q = self.term()
            p = poly_add(p, q if op == "+" else -q)
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.next()
            p = poly_mul(p, self.unary())
        return p

    def unary(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "-":
            self.next()
            return -self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.next()
            exp = self.peek()
            if exp[0] != "num":
                self.error("malformed exponent: expected a natural number", exp)
            self.next()
            after = self.peek()
            if after[0] == "op" and after[1] == "^":
                self.error("chained exponents are ambiguous; use parentheses", after)
            return base ** int(exp[1])
        return base

    def atom(self) -> Polynomial:
        tok = self.next()
        kind, val, _ = tok
        if kind == "num":
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.next()
                den = self.next()
                if den[0] != "num":
                    self.error("malformed rational: expected a denominator", den)
                if int(den[1]) == 0:
                    self.error("zero denominator", den)
                return self.ring.constant(rat(int(val), int(den[1])))
            return self.ring.constant(int(val))
        if kind == "id":
            k = self.index.get(val)
            if k is None:
                self.error(f"unknown variable {val!r}", tok)
            return self.ring.monomial(pp_var(self.ring.nvars, k))
        if kind == "op" and val == "(":
            p = self.expr()
            close = self.next()
            if close[1] != ")" or close[0] != "op":
                self.error("unbalanced parenthesis: expected ')'", close)
            return p
        if kind == "end":
            self.error("unexpected end of expression", tok)
        if val == ")":
            self.error("unbalanced parenthesis", tok)
        self.error(f"unexpected token {val!r}", tok)


def parse_polynomial(text: str, ring: Ring, line: int = 1) -> Polynomial:
    return _Parser(_tokenize(text, line), ring, line).parse()


def parse_system(text: str, order="degrevlex", variables: Optional[Sequence[str]] = None) -> SystemFile:
    """Parse a system file; see the module docstring for the format."""
    header: Optional[List[str]] = list(variables) if variables is not None else None
    body: List[Tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = _HEADER_RE.match(raw)
        if m is not None:
            if header is not None or body:
                raise ParseError("'vars:' header must come first and only once", lineno, 1)
            names = [s.strip() for s in m.group(1).split(",") if s.strip()]
            for name in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                    raise ParseError(f"invalid variable name {name!r}", lineno, raw.find(name) + 1)
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable in header", lineno, 1)
            header = names
            continue
        body.append((lineno, raw))
    tokenized = [(lineno, _tokenize(raw, lineno)) for lineno, raw in body]
    if header is None:
        header = []
        for _, toks in tokenized:
            for kind, val, _ in toks:
                if kind == "id" and val not in header:
                    header.append(val)
    ring = Ring(header, order)
    polys = [_Parser(toks, ring, lineno).parse() for lineno, toks in tokenized]
    return SystemFile(list(header), polys, ring)


def _format_pp(pp: PowerProduct, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, pp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(p: Polynomial, names: Optional[Sequence[str]] = None) -> str:
    """Render in descending order, e.g. ``3/4*X^3*Y^2 - 2*Y^4``; parses back to ``p``."""
    names = names or p.ring.names
    if not p.terms:
        return "0"
    out = []
    for i, (pp, c) in enumerate(p.terms):
        neg = c < 0
        a = -c if neg else c
        mono = _format_pp(pp, names)
        if not mono:
            body = format_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_rational(a)}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_system(polys: Sequence[Polynomial], ring: Optional[Ring] = None) -> str:
    ring = ring or (polys[0].ring if polys else None)
    lines = []
    if ring is not None:
        lines.append("vars: " + ", ".join(ring.names))
    lines.extend(format_poly(p) for p in polys)
    return "\n".join(lines) + "\n"
