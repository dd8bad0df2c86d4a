"""Sparse multivariate polynomials over the rationals.

A :class:`Polynomial` is an immutable tuple of ``(pp, coeff)`` pairs kept
strictly descending in the monomial order of its :class:`Ring`, with no
zero coefficients.  The empty tuple is the zero polynomial.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .coeff import ONE, ZERO, Rational, RationalLike, rat
from .order import (
    DEGREVLEX,
    MonomialOrder,
    PowerProduct,
    as_monomial_order,
    divmask,
    pp_div,
    pp_lcm,
    pp_mul,
    pp_one,
    pp_var,
)


class EmptyPolynomialError(ValueError):
    """Raised when the leading power-product of the zero polynomial is requested."""


@dataclass(frozen=True)
class Ring:
    """Polynomial ring Q[names] with a fixed monomial order."""

    names: Tuple[str, ...]
    order: MonomialOrder = DEGREVLEX

    def __init__(self, names: Union[str, Sequence[str]], order="degrevlex"):
        if isinstance(names, str):
            names = [s.strip() for s in names.replace(",", " ").split()]
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "order", as_monomial_order(order))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def with_order(self, order) -> "Ring":
        return Ring(self.names, order)

    @property
    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.monomial(pp_var(self.nvars, i)) for i in range(self.nvars))

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    @property
    def one(self) -> "Polynomial":
        return self.constant(ONE)

    def constant(self, c: RationalLike) -> "Polynomial":
        c = rat(c)
        return Polynomial(self, ((pp_one(self.nvars), c),) if c else ())

    def monomial(self, pp: PowerProduct, c: RationalLike = 1) -> "Polynomial":
        if len(pp) != self.nvars:
            raise ValueError(f"power-product {pp} has wrong length for {self.nvars} variables")
        c = rat(c)
        return Polynomial(self, ((tuple(pp), c),) if c else ())

    def from_dict(self, d: Dict[PowerProduct, RationalLike]) -> "Polynomial":
        """Build a polynomial from a ``{pp: coeff}`` mapping (zeros dropped)."""
        items = []
        for pp, c in d.items():
            c = rat(c)
            if c:
                if len(pp) != self.nvars:
                    raise ValueError(f"power-product {pp} has wrong length for {self.nvars} variables")
                items.append((tuple(pp), c))
        return self._sorted(items)

    def from_terms(self, terms: Iterable[Tuple[PowerProduct, RationalLike]]) -> "Polynomial":
        """Build a polynomial from possibly repeated, unordered terms."""
        acc: Dict[PowerProduct, Rational] = {}
        for pp, c in terms:
            pp = tuple(pp)
            acc[pp] = acc.get(pp, ZERO) + rat(c)
        return self.from_dict(acc)

    def _sorted(self, items: List[Tuple[PowerProduct, Rational]]) -> "Polynomial":
        neg = self.order.neg_key
        items.sort(key=lambda it: neg(it[0]))
        return Polynomial(self, tuple(items))

    def parse(self, text: str) -> "Polynomial":
        from .textio import parse_polynomial

        return parse_polynomial(text, self)

    def __str__(self) -> str:
        return f"QQ[{', '.join(self.names)}] ({self.order.kind})"


class Polynomial:
    """Immutable sparse polynomial; build via :class:`Ring` helpers or arithmetic."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Tuple[Tuple[PowerProduct, Rational], ...]):
        self.ring = ring
        self.terms = terms

    # -- accessors
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def lp(self) -> PowerProduct:
        if not self.terms:
            raise EmptyPolynomialError("leading power-product of zero polynomial is undefined")
        return self.terms[0][0]

    @property
    def lc(self) -> Rational:
        return self.terms[0][1] if self.terms else ZERO

    def support(self) -> List[PowerProduct]:
        return [pp for pp, _ in self.terms]

    def coeff(self, pp: PowerProduct) -> Rational:
        for t, c in self.terms:
            if t == pp:
                return c
        return ZERO

    def as_dict(self) -> Dict[PowerProduct, Rational]:
        return dict(self.terms)

    def total_degree(self) -> int:
        return max((sum(pp) for pp, _ in self.terms), default=-1)

    def monic(self) -> "Polynomial":
        if not self.terms or self.terms[0][1] == 1:
            return self
        inv = 1 / self.terms[0][1]
        return Polynomial(self.ring, tuple((pp, c * inv) for pp, c in self.terms))

    def to_ring(self, ring: Ring) -> "Polynomial":
        """Re-express in ``ring`` (same variables, possibly another order)."""
        if ring == self.ring:
            return self
        if ring.names != self.ring.names:
            raise ValueError("rings have different variables")
        return ring._sorted(list(self.terms))

    # -- arithmetic
    def __add__(self, other):
        return poly_add(self, _coerce(self.ring, other))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, tuple((pp, -c) for pp, c in self.terms))

    def __sub__(self, other):
        return poly_add(self, -_coerce(self.ring, other))

    def __rsub__(self, other):
        return poly_add(_coerce(self.ring, other), -self)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return monom_mult(rat(other), pp_one(self.ring.nvars), self)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            if other.ring.names != self.ring.names:
                return False
            if other.ring.order == self.ring.order:
                return self.terms == other.terms
            return dict(self.terms) == dict(other.terms)
        if isinstance(other, (int, Rational)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __repr__(self) -> str:
        from .textio import format_poly

        return f"Polynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        from .textio import format_poly

        return format_poly(self)


def _coerce(ring: Ring, x) -> Polynomial:
    if isinstance(x, Polynomial):
        if x.ring.names != ring.names:
            raise ValueError("polynomials from different rings")
        return x.to_ring(ring)
    return ring.constant(x)


def is_valid(p: Polynomial) -> bool:
    """Canonical-form predicate: nonzero coefficients, strictly descending."""
    key = p.ring.order.key
    n = p.ring.nvars
    prev = None
    for pp, c in p.terms:
        if c == 0 or len(pp) != n or any(e < 0 for e in pp):
            return False
        k = key(pp)
        if prev is not None and not k < prev:
            return False
        prev = k
    return True


def leading(p: Polynomial) -> Tuple[PowerProduct, Rational]:
    if not p.terms:
        raise EmptyPolynomialError("leading term of zero polynomial is undefined")
    return p.terms[0]


def lp(p: Polynomial) -> PowerProduct:
    return p.lp


def lc(p: Polynomial) -> Rational:
    return p.lc


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    if not q.terms:
        return p
    if not p.terms:
        return q
    acc = dict(p.terms)
    for pp, c in q.terms:
        v = acc.get(pp)
        if v is None:
            acc[pp] = c
        else:
            v += c
            if v:
                acc[pp] = v
            else:
                del acc[pp]
    return p.ring._sorted(list(acc.items()))


def poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return poly_add(p, -q)


def monom_mult(c: RationalLike, t: PowerProduct, p: Polynomial) -> Polynomial:
    """Multiply ``p`` by the monomial ``c * t``; order is preserved by admissibility."""
    c = rat(c)
    if not c or not p.terms:
        return p.ring.zero
    if c == 1:
        return Polynomial(p.ring, tuple((pp_mul(t, pp), a) for pp, a in p.terms))
    return Polynomial(p.ring, tuple((pp_mul(t, pp), c * a) for pp, a in p.terms))


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if not p.terms or not q.terms:
        return p.ring.zero
    acc: Dict[PowerProduct, Rational] = {}
    for s, a in p.terms:
        for t, b in q.terms:
            pp = pp_mul(s, t)
            acc[pp] = acc.get(pp, ZERO) + a * b
    return p.ring._sorted([(pp, c) for pp, c in acc.items() if c])


def spoly(p: Polynomial, q: Polynomial) -> Polynomial:
    """``t/(lc(p) lp(p)) * p - t/(lc(q) lp(q)) * q`` with ``t = lcm(lp(p), lp(q))``."""
    if not p.terms or not q.terms:
        raise EmptyPolynomialError("S-polynomial of a zero polynomial")
    (sp, sc), (tp, tc) = p.terms[0], q.terms[0]
    t = pp_lcm(sp, tp)
    return poly_add(
        monom_mult(1 / sc, pp_div(t, sp), p),
        monom_mult(-1 / tc, pp_div(t, tp), q),
    )


class _Reducer:
    """Leading data of a reducer polynomial, cached for divisibility scans."""

    __slots__ = ("lp", "lc", "mask", "tail")

    def __init__(self, g: Polynomial):
        self.lp = g.terms[0][0]
        self.lc = g.terms[0][1]
        self.mask = divmask(self.lp)
        self.tail = g.terms[1:]


def _find_reducer(reducers: Sequence[_Reducer], m: PowerProduct, mmask: int):
    for r in reducers:
        if r.mask & ~mmask:
            continue
        t = pp_div(m, r.lp)
        if t is not None:
            return r, t
    return None, None


class ReducerSet:
    """Reducers with cached leading data, for many normal forms against one growing basis."""

    def __init__(self, G: Sequence[Polynomial] = ()):
        self.reducers: List[_Reducer] = []
        for g in G:
            self.append(g)

    def append(self, g: Polynomial) -> None:
        if g.terms:
            self.reducers.append(_Reducer(g))

    def normal_form(self, p: Polynomial) -> Polynomial:
        """Fully reduce ``p``: largest reducible term first, earliest eligible reducer."""
        reducers = self.reducers
        if not reducers or not p.terms:
            return p
        ring = p.ring
        neg = ring.order.neg_key
        work = dict(p.terms)
        heap = [(neg(pp), pp) for pp in work]
        heapq.heapify(heap)
        out = []
        while heap:
            _, m = heapq.heappop(heap)
            c = work.pop(m, None)
            if c is None:
                continue
            r, t = _find_reducer(reducers, m, divmask(m))
            if r is None:
                out.append((m, c))
                continue
            q = c / r.lc
            for pp2, c2 in r.tail:
                m2 = tuple(map(int.__add__, t, pp2))
                old = work.get(m2)
                if old is None:
                    work[m2] = -q * c2
                    heapq.heappush(heap, (neg(m2), m2))
                else:
                    v = old - q * c2
                    if v:
                        work[m2] = v
                    else:
                        del work[m2]
        return Polynomial(ring, tuple(out))


def normal_form(G: Sequence[Polynomial], p: Polynomial) -> Polynomial:
    """Fully reduce ``p`` modulo ``G``.

    Always cancels the largest reducible term, using the earliest
    eligible reducer in ``G``.
    """
    return ReducerSet(G).normal_form(p)


def autoreduce(G: Sequence[Polynomial], groebner: bool = False) -> List[Polynomial]:
    """Return the reduced basis of ``G``: monic, inter-reduced, sorted by descending lp.

    For a Gröbner basis this is the unique reduced Gröbner basis of its ideal.
    With ``groebner=True`` the caller promises that ``G`` is a Gröbner basis, and
    elements whose lp is divisible by another lp are dropped instead of reduced
    (their normal form would be zero anyway).
    """
    polys = [g for g in G if g.terms]
    if not polys:
        return []
    ring = polys[0].ring
    neg = ring.order.neg_key
    # process by ascending lp; an element whose lp is divisible by a kept lp is
    # replaced by its normal form, and kept elements it newly divides are requeued
    polys.sort(key=lambda g: neg(g.lp), reverse=True)
    queue = deque(polys)
    kept: List[Polynomial] = []
    while queue:
        g = queue.popleft()
        if any(pp_div(g.lp, h.lp) is not None for h in kept):
            if groebner:
                continue
            g = normal_form(kept, g)
            if not g.terms:
                continue
        stale = [h for h in kept if pp_div(h.lp, g.lp) is not None]
        if stale:
            kept = [h for h in kept if pp_div(h.lp, g.lp) is None]
            queue.extendleft(reversed(stale))
        kept.append(g)
    # lps are now pairwise non-divisible, so tail reduction leaves every lp in place
    result = [normal_form(kept[:i] + kept[i + 1:], g).monic() for i, g in enumerate(kept)]
    result.sort(key=lambda g: neg(g.lp))
    return result
