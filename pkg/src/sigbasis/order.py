"""Power-products, module terms and their orderings.

A power-product is a tuple of natural exponents, one slot per ring
variable; variable 0 has the highest lex priority.  A module term is a
pair ``(pp, component)`` with 0-based components.

Orders are exposed through sort keys: ``order.key(a) < order.key(b)``
iff ``a`` is strictly smaller than ``b``.  Keys are flat int tuples, so
they also negate cleanly for use in max-heaps.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from operator import add
from typing import Callable, Optional, Tuple

PowerProduct = Tuple[int, ...]
Term = Tuple[PowerProduct, int]

ORDER_KINDS = ("lex", "deglex", "degrevlex")
POSITIONS = ("pot", "top")


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _sign(a, b) -> Ordering:
    if a < b:
        return Ordering.LT
    if a > b:
        return Ordering.GT
    return Ordering.EQ


# -- power-products ---------------------------------------------------------

def pp_one(nvars: int) -> PowerProduct:
    return (0,) * nvars


def pp_var(nvars: int, i: int, exp: int = 1) -> PowerProduct:
    e = [0] * nvars
    e[i] = exp
    return tuple(e)


def pp_mul(a: PowerProduct, b: PowerProduct) -> PowerProduct:
    return tuple(map(add, a, b))


def pp_lcm(a: PowerProduct, b: PowerProduct) -> PowerProduct:
    return tuple(map(max, a, b))


def pp_divides(b: PowerProduct, a: PowerProduct) -> bool:
    """True iff ``b`` divides ``a``."""
    for x, y in zip(b, a):
        if x > y:
            return False
    return True


def pp_div(a: PowerProduct, b: PowerProduct) -> Optional[PowerProduct]:
    """Return ``a / b`` if ``b`` divides ``a``, else None."""
    q = []
    for x, y in zip(a, b):
        if x < y:
            return None
        q.append(x - y)
    return tuple(q)


def pp_degree(a: PowerProduct) -> int:
    return sum(a)


def pp_is_one(a: PowerProduct) -> bool:
    return not any(a)


def pp_coprime(a: PowerProduct, b: PowerProduct) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def divmask(a: PowerProduct) -> int:
    """Bitmask of the variables occurring in ``a``; a cheap divisibility filter."""
    m = 0
    bit = 1
    for e in a:
        if e:
            m |= bit
        bit <<= 1
    return m


# -- monomial orders ---------------------------------------------------------

def _lex_key(a: PowerProduct) -> tuple:
    return a


def _deglex_key(a: PowerProduct) -> tuple:
    return (sum(a),) + a


def _degrevlex_key(a: PowerProduct) -> tuple:
    return (sum(a),) + tuple([-e for e in reversed(a)])


def _lex_neg(a: PowerProduct) -> tuple:
    return tuple([-e for e in a])


def _deglex_neg(a: PowerProduct) -> tuple:
    return (-sum(a),) + tuple([-e for e in a])


def _degrevlex_neg(a: PowerProduct) -> tuple:
    return (-sum(a),) + a[::-1]


_KEYS = {
    "lex": (_lex_key, _lex_neg),
    "deglex": (_deglex_key, _deglex_neg),
    "degrevlex": (_degrevlex_key, _degrevlex_neg),
}


@dataclass(frozen=True)
class MonomialOrder:
    """An admissible order on power-products: lex, deglex or degrevlex."""

    kind: str = "degrevlex"

    def __post_init__(self):
        if self.kind not in _KEYS:
            raise ValueError(f"unknown monomial order {self.kind!r}; expected one of {ORDER_KINDS}")

    @property
    def key(self) -> Callable[[PowerProduct], tuple]:
        return _KEYS[self.kind][0]

    @property
    def neg_key(self) -> Callable[[PowerProduct], tuple]:
        """Key whose ascending order is the descending monomial order."""
        return _KEYS[self.kind][1]

    def cmp(self, a: PowerProduct, b: PowerProduct) -> Ordering:
        k = self.key
        return _sign(k(a), k(b))

    def __str__(self) -> str:
        return self.kind


LEX = MonomialOrder("lex")
DEGLEX = MonomialOrder("deglex")
DEGREVLEX = MonomialOrder("degrevlex")


def as_monomial_order(o) -> MonomialOrder:
    return o if isinstance(o, MonomialOrder) else MonomialOrder(str(o).lower())


def pp_cmp(o: MonomialOrder, a: PowerProduct, b: PowerProduct) -> Ordering:
    return o.cmp(a, b)


# -- module terms ------------------------------------------------------------

def term_mul(t: PowerProduct, u: Term) -> Term:
    return (tuple(map(add, t, u[0])), u[1])


def term_div(u: Term, v: Term) -> Optional[PowerProduct]:
    """Return ``t`` with ``u = t * v``, or None if ``v`` does not divide ``u``."""
    if u[1] != v[1]:
        return None
    return pp_div(u[0], v[0])


def term_divides(v: Term, u: Term) -> bool:
    return v[1] == u[1] and pp_divides(v[0], u[0])


@dataclass(frozen=True)
class TermOrder:
    """Extension of a monomial order to module terms, position-over-term or term-over-position."""

    mo: MonomialOrder = DEGREVLEX
    position: str = "pot"

    def __post_init__(self):
        if self.position not in POSITIONS:
            raise ValueError(f"unknown module order {self.position!r}; expected pot or top")

    def key(self, u: Term) -> tuple:
        k = self.mo.key(u[0])
        if self.position == "pot":
            return (u[1],) + k
        return k + (u[1],)

    def cmp(self, u: Term, v: Term) -> Ordering:
        return _sign(self.key(u), self.key(v))

    def max(self, u: Term, v: Term) -> Term:
        return v if self.key(u) < self.key(v) else u

    def __str__(self) -> str:
        return f"{self.position.upper()}({self.mo.kind})"


def POT(mo=DEGREVLEX) -> TermOrder:
    return TermOrder(as_monomial_order(mo), "pot")


def TOP(mo=DEGREVLEX) -> TermOrder:
    return TermOrder(as_monomial_order(mo), "top")


def term_cmp(to: TermOrder, u: Term, v: Term) -> Ordering:
    return to.cmp(u, v)
