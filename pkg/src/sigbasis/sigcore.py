"""Signature-based Gröbner bases via rewrite bases on sig-poly-pairs.

The working objects are :class:`SigPoly` values ``(sig, poly)``: the
signature (leading module term) of some module element together with its
image polynomial.  :func:`rb` runs the rewrite-basis completion loop;
:func:`gb_sig` projects the result onto the polynomials.

The small functions in the first half of the module (``spp_cmp``,
``sig_trd``, ``sig_crit`` ...) are direct, unoptimised statements of each
operation.  :class:`_Basis` holds per-element caches so that the main loop
can run the same operations without recomputing leading data; with
``check=True`` the loop cross-checks every decision against the direct
versions.
"""

from __future__ import annotations

import bisect
import heapq
from dataclasses import dataclass
from functools import cached_property
from operator import add
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .order import (
    Ordering,
    PowerProduct,
    Term,
    TermOrder,
    as_monomial_order,
    divmask,
    pp_div,
    pp_divides,
    pp_lcm,
    pp_mul,
    pp_one,
    term_divides,
    term_mul,
)
from .poly import Polynomial, spoly

REWRITE_KINDS = ("rat", "add")


class SigPoly(NamedTuple):
    sig: Term
    poly: Polynomial


@dataclass(frozen=True)
class Unit:
    """Canonical basis vector ``e_k``; its signature is ``(1, k)``."""

    k: int
    sig: Term


@dataclass(frozen=True)
class SPair:
    """S-pair of basis elements ``i < j``, with its signature cached for sorting."""

    i: int
    j: int
    sig: Term


PairEntry = Union[Unit, SPair]


class InvariantViolation(AssertionError):
    pass


def _check_rw(rw: str) -> str:
    if rw not in REWRITE_KINDS:
        raise ValueError(f"unknown rewrite order {rw!r}; expected rat or add")
    return rw


# -- rewrite orders ----------------------------------------------------------

def spp_cmp(rw: str, to: TermOrder, a: SigPoly, b: SigPoly) -> Ordering:
    """Compare sig-poly-pairs under the rewrite order ``rw``.

    rat: ``a < b`` iff ``lp(b) a.sig < lp(a) b.sig``, ties broken by signature.
    add: signatures only.
    """
    _check_rw(rw)
    if rw == "rat":
        x = to.key(term_mul(b.poly.lp, a.sig))
        y = to.key(term_mul(a.poly.lp, b.sig))
        if x < y:
            return Ordering.LT
        if x > y:
            return Ordering.GT
    return to.cmp(a.sig, b.sig)


def is_canon_rewriter(rw: str, to: TermOrder, G: Sequence[SigPoly], u: Term, a: SigPoly) -> bool:
    if a not in G or not a.poly or not term_divides(a.sig, u):
        return False
    for g in G:
        if g.poly and term_divides(g.sig, u) and spp_cmp(rw, to, g, a) == Ordering.GT:
            return False
    return True


# -- s-reduction ---------------------------------------------------------------

_RELATIONS = {
    "<=": lambda x, y: x <= y,
    "<": lambda x, y: x < y,
    "=": lambda x, y: x == y,
}


def is_sig_red(r1: str, r2: str, to: TermOrder, G: Sequence[SigPoly], a: SigPoly) -> bool:
    """Whether one s-reduction step of flavour (r1, r2) applies to ``a`` modulo ``G``.

    ``r1`` relates ``t * sig(g)`` to ``sig(a)`` and ``r2`` relates
    ``t * lp(g)`` to ``lp(a)``; each is one of ``"<="``, ``"<"``, ``"="``.
    """
    rel1, rel2 = _RELATIONS[r1], _RELATIONS[r2]
    if not a.poly:
        return False
    mo = a.poly.ring.order
    sig_key = to.key(a.sig)
    lp_key = mo.key(a.poly.lp)
    for g in G:
        if not g.poly:
            continue
        glp = g.poly.lp
        for m, _ in a.poly.terms:
            t = pp_div(m, glp)
            if t is None:
                continue
            if rel1(to.key(term_mul(t, g.sig)), sig_key) and rel2(mo.key(m), lp_key):
                return True
    return False


def sig_trd(to: TermOrder, G: Sequence[SigPoly], a: SigPoly, trace: Optional[list] = None) -> SigPoly:
    """Fully regular s-reduce ``a`` modulo ``G`` (top and tail); the signature is unchanged.

    If ``trace`` is a list, each step is appended as ``(coeff, t, index)``
    meaning ``p -= coeff * t * G[index].poly``.
    """
    basis = _Basis(to)
    for g in G:
        basis.append(g)
    return SigPoly(a.sig, basis.reduce(a.sig, a.poly, trace))


# -- S-pairs -----------------------------------------------------------------

@dataclass(frozen=True)
class SPairParts:
    regular: bool
    u_a: Term
    u_b: Term
    a: Polynomial
    b: Polynomial
    _sig: Optional[Term] = None

    @property
    def sig(self) -> Term:
        if not self.regular:
            raise ValueError("singular S-pair has no well-defined signature")
        return self._sig

    @cached_property
    def poly(self) -> Polynomial:
        # computed on demand: the criteria only need the multipliers
        return spoly(self.a, self.b)


def spair_parts(to: TermOrder, a: SigPoly, b: SigPoly) -> SPairParts:
    if not a.poly or not b.poly:
        raise ValueError("S-pair of a sig-poly-pair with zero polynomial")
    la, lb = a.poly.lp, b.poly.lp
    t = pp_lcm(la, lb)
    u_a = term_mul(pp_div(t, la), a.sig)
    u_b = term_mul(pp_div(t, lb), b.sig)
    regular = u_a != u_b
    sig = to.max(u_a, u_b) if regular else None
    return SPairParts(regular, u_a, u_b, a.poly, b.poly, sig)


# -- syzygy signatures ---------------------------------------------------------

def _insert_minimal(ss: List[Term], s: Term) -> List[Term]:
    """Add ``s`` keeping only divisibility-minimal signatures."""
    if any(term_divides(v, s) for v in ss):
        return ss
    return [v for v in ss if not term_divides(s, v)] + [s]


def koszul_syz_sigs(fs: Sequence[Polynomial], to: TermOrder) -> List[Term]:
    """Signatures of the Koszul syzygies ``f_j e_i - f_i e_j`` for ``i < j``."""
    ss: List[Term] = []
    for j in range(len(fs)):
        for i in range(j):
            if fs[i] and fs[j]:
                ss = _insert_minimal(ss, to.max((fs[j].lp, i), (fs[i].lp, j)))
    return ss


def new_syz_sigs(ss: Sequence[Term], gs: Sequence[SigPoly], e: PairEntry,
                 fs: Sequence[Polynomial], to: TermOrder) -> List[Term]:
    """Add signatures of the syzygies ``f_k g - g.poly e_k`` when ``e`` is ``e_k``.

    When the two candidate leading terms coincide the true signature is not
    determined by sig-poly data, and nothing is added.
    """
    out = list(ss)
    if not isinstance(e, Unit):
        return out
    k = e.k
    fk = fs[k]
    for g in gs:
        if not g.poly:
            continue
        c2 = (g.poly.lp, k)
        if not fk:
            s = c2
        else:
            c1 = term_mul(fk.lp, g.sig)
            if c1 == c2:
                continue
            s = to.max(c1, c2)
        out = _insert_minimal(out, s)
    return out


# -- criteria and pair management -----------------------------------------------

def sig_crit(rw: str, to: TermOrder, gs: Sequence[SigPoly], ss: Sequence[Term], e: PairEntry) -> bool:
    """True if ``e`` can be skipped (syzygy criterion or rewrite criterion)."""
    if isinstance(e, Unit):
        return any(term_divides(s, (e.sig[0], e.k)) for s in ss)
    a, b = gs[e.i], gs[e.j]
    parts = spair_parts(to, a, b)
    if not parts.regular:
        raise ValueError("sig_crit called on a singular S-pair")
    for u, g in ((parts.u_a, a), (parts.u_b, b)):
        if any(term_divides(s, u) for s in ss):
            return True
        if not is_canon_rewriter(rw, to, gs, u, g):
            return True
    return False


def _entry_key(to: TermOrder, e: PairEntry) -> tuple:
    if isinstance(e, Unit):
        return (to.key(e.sig), 0, e.k, 0)
    return (to.key(e.sig), 1, e.i, e.j)


def add_spairs(ps: Sequence[PairEntry], gs: Sequence[SigPoly], b: SigPoly, to: TermOrder) -> List[PairEntry]:
    """Insert the regular S-pairs of ``b`` (index ``len(gs)``) with every ``g`` in ``gs``."""
    keyed = [(_entry_key(to, e), e) for e in ps]
    j = len(gs)
    for i, g in enumerate(gs):
        parts = spair_parts(to, g, b)
        if parts.regular:
            e = SPair(i, j, parts.sig)
            bisect.insort(keyed, (_entry_key(to, e), e))
    return [e for _, e in keyed]


def poly_of_pair(e: PairEntry, gs: Sequence[SigPoly], fs: Sequence[Polynomial], to: TermOrder) -> SigPoly:
    """Materialise a queue entry as a sig-poly-pair."""
    if isinstance(e, Unit):
        if not 0 <= e.k < len(fs):
            raise IndexError(f"unit vector e_{e.k} out of range for {len(fs)} inputs")
        return SigPoly(e.sig, fs[e.k])
    if not (0 <= e.i < len(gs) and 0 <= e.j < len(gs)):
        raise IndexError(f"S-pair ({e.i}, {e.j}) out of range for basis of size {len(gs)}")
    parts = spair_parts(to, gs[e.j], gs[e.i])
    return SigPoly(parts.sig, parts.poly)


# -- cached basis used by the main loop ----------------------------------------

class _Elem:
    __slots__ = ("sig", "sigpp", "comp", "sigkey", "sigmask", "poly", "lp", "lc", "lpmask", "tail")

    def __init__(self, sp: SigPoly, to: TermOrder):
        self.sig = sp.sig
        self.sigpp, self.comp = sp.sig
        self.sigkey = to.key(sp.sig)
        self.sigmask = divmask(self.sigpp)
        self.poly = sp.poly
        if sp.poly.terms:
            self.lp, self.lc = sp.poly.terms[0]
            self.lpmask = divmask(self.lp)
            self.tail = sp.poly.terms[1:]
        else:
            self.lp = self.lc = self.tail = None
            self.lpmask = -1


class _Basis:
    """A list of sig-poly-pairs with cached leading data."""

    def __init__(self, to: TermOrder):
        self.to = to
        self.elems: List[_Elem] = []
        self.sps: List[SigPoly] = []
        self.pot = to.position == "pot"
        self.mokey = to.mo.key

    def append(self, sp: SigPoly) -> None:
        self.elems.append(_Elem(sp, self.to))
        self.sps.append(sp)

    def sigpolys(self) -> List[SigPoly]:
        return list(self.sps)

    def _regular(self, e: _Elem, t: PowerProduct, sigpp, comp, sigkey, sigppkey) -> bool:
        """Whether ``t * e.sig`` is strictly below the signature being reduced."""
        if self.pot:
            if e.comp != comp:
                return e.comp < comp
            return self.mokey(tuple(map(add, t, e.sigpp))) < sigppkey
        return self.to.key((tuple(map(add, t, e.sigpp)), e.comp)) < sigkey

    def reduce(self, sig: Term, poly: Polynomial, trace: Optional[list] = None) -> Polynomial:
        """Regular s-reduction of ``poly`` in signature ``sig``: largest reducible term first,
        earliest eligible basis element first."""
        if not poly.terms:
            return poly
        elems = [e for e in self.elems if e.lp is not None]
        if not elems:
            return poly
        ring = poly.ring
        neg = ring.order.neg_key
        sigpp, comp = sig
        sigkey = self.to.key(sig)
        sigppkey = self.mokey(sigpp)
        work = dict(poly.terms)
        heap = [(neg(pp), pp) for pp in work]
        heapq.heapify(heap)
        out = []
        index = {id(e): k for k, e in enumerate(self.elems)} if trace is not None else None
        while heap:
            _, m = heapq.heappop(heap)
            c = work.pop(m, None)
            if c is None:
                continue
            mmask = divmask(m)
            red = None
            for e in elems:
                if e.lpmask & ~mmask:
                    continue
                t = pp_div(m, e.lp)
                if t is not None and self._regular(e, t, sigpp, comp, sigkey, sigppkey):
                    red = e
                    break
            if red is None:
                out.append((m, c))
                continue
            q = c / red.lc
            if trace is not None:
                trace.append((q, t, index[id(red)]))
            for pp2, c2 in red.tail:
                m2 = tuple(map(add, t, pp2))
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

    def is_canon(self, rw: str, u: Term, idx: int) -> bool:
        """Whether element ``idx`` is the canonical rewriter in ``u``."""
        upp, ucomp = u
        umask = divmask(upp)
        a = self.elems[idx]
        elems = self.elems
        if rw == "add":
            # signatures increase with the index, so only later elements can beat ``a``
            for k in range(idx + 1, len(elems)):
                g = elems[k]
                if g.comp == ucomp and not (g.sigmask & ~umask) and pp_divides(g.sigpp, upp):
                    return False
            return True
        key = self.to.key
        for k, g in enumerate(elems):
            if k == idx or g.comp != ucomp or (g.sigmask & ~umask) or not pp_divides(g.sigpp, upp):
                continue
            x = key((tuple(map(add, a.lp, g.sigpp)), g.comp))
            y = key((tuple(map(add, g.lp, a.sigpp)), a.comp))
            if x > y or (x == y and g.sigkey > a.sigkey):
                return False
        return True


class _SyzSet:
    """Divisibility-minimal set of known syzygy signatures."""

    def __init__(self, terms: Sequence[Term] = ()):
        self.terms: List[Term] = []
        self.masks: List[int] = []
        for s in terms:
            self.add(s)

    def divides(self, u: Term) -> bool:
        upp, ucomp = u
        umask = divmask(upp)
        for (spp, scomp), m in zip(self.terms, self.masks):
            if scomp == ucomp and not (m & ~umask) and pp_divides(spp, upp):
                return True
        return False

    def add(self, s: Term) -> None:
        if self.divides(s):
            return
        keep = [k for k, v in enumerate(self.terms) if not term_divides(s, v)]
        self.terms = [self.terms[k] for k in keep] + [s]
        self.masks = [self.masks[k] for k in keep] + [divmask(s[0])]


# -- main loop -----------------------------------------------------------------

@dataclass
class RBState:
    """Snapshot of the completion loop: basis, syzygy signatures, pair queue, zero count."""

    gs: List[SigPoly]
    ss: List[Term]
    ps: List[PairEntry]
    z: int = 0


def check_rb_invariant(state: RBState, fs: Sequence[Polynomial], to: TermOrder, since: int = 0,
                       ps_keys: Optional[Sequence[tuple]] = None, queue_checked: bool = False) -> List[str]:
    """Return descriptions of every violated loop invariant (empty when all hold).

    Basis elements never change once appended, so a caller that already
    validated ``gs[:since]`` may pass ``since`` to skip re-checking them.
    ``ps_keys`` may supply the sort keys of the queue.  A caller that checked
    every queue entry against its neighbours and the basis when it was
    inserted passes ``queue_checked`` to skip the full queue scans; only the
    head is then compared with the basis.
    """
    problems = []
    gs = state.gs
    m = len(fs)
    for k in range(since, len(gs)):
        g = gs[k]
        if not g.poly:
            problems.append(f"gs[{k}] has zero polynomial")
        if not 0 <= g.sig[1] < m:
            problems.append(f"gs[{k}] signature component {g.sig[1]} out of range")
        if k and not to.key(gs[k - 1].sig) < to.key(g.sig):
            problems.append(f"gs signatures not strictly increasing at {k}")
        if g.poly and is_sig_red("<", "<=", to, gs[:k], g):
            problems.append(f"gs[{k}] is regular s-reducible modulo its predecessors")
    if queue_checked:
        head = ps_keys[0] if ps_keys else (_entry_key(to, state.ps[0]) if state.ps else None)
        keys = [head] if head is not None else []
    else:
        keys = list(ps_keys) if ps_keys is not None else [_entry_key(to, e) for e in state.ps]
        if keys != sorted(keys):
            problems.append("pair queue is not sorted by signature")
        n = len(gs)
        for e in state.ps:
            if type(e) is SPair and not (0 <= e.i < e.j < n):
                problems.append(f"queue entry {e} references invalid indices")
    # with both lists sorted only the queue head and the last basis element matter
    if gs and keys and keys[0][0] < to.key(gs[-1].sig):
        problems.append(f"queue entry {state.ps[0]} has signature below a basis signature")
    return problems


def _resolve_orders(fs: Sequence[Polynomial], order, position) -> Tuple[List[Polynomial], TermOrder]:
    if isinstance(position, TermOrder):
        to = position
    else:
        if order is None:
            order = fs[0].ring.order if fs else "degrevlex"
        to = TermOrder(as_monomial_order(order), str(position).lower())
    fs = list(fs)
    if fs:
        ring = fs[0].ring.with_order(to.mo)
        fs = [f.to_ring(ring) for f in fs]
    return fs, to


def rb(fs: Sequence[Polynomial], order=None, position="pot", rewrite: str = "rat", *,
       check: bool = False, hook: Optional[Callable[[RBState], None]] = None) -> Tuple[List[SigPoly], int]:
    """Compute a rewrite basis of ``fs``; return it with the number of zero-reductions.

    ``order`` is a monomial order (default: the ring's), ``position`` is
    ``"pot"``, ``"top"`` or a :class:`TermOrder`.  With ``check=True`` every
    loop iteration validates the invariants and cross-checks the fast
    criteria against their direct definitions.  ``hook`` receives a
    :class:`RBState` snapshot after each iteration.
    """
    rw = _check_rw(rewrite)
    fs, to = _resolve_orders(fs, order, position)
    if not fs:
        return [], 0
    nvars = fs[0].ring.nvars
    one = pp_one(nvars)
    basis = _Basis(to)
    ss = _SyzSet(koszul_syz_sigs(fs, to))
    units = sorted((_entry_key(to, e), e) for e in (Unit(k, (one, k)) for k in range(len(fs))))
    # the queue as parallel lists of sort keys and entries
    keys = [k for k, _ in units]
    ps = [e for _, e in units]
    z = 0

    checked = 0
    if check:
        _assert_ok(RBState([], list(ss.terms), ps, z), fs, to)

    while ps:
        keys.pop(0)
        a = ps.pop(0)
        if isinstance(a, Unit):
            fk = fs[a.k]
            if check:
                expected = new_syz_sigs(ss.terms, basis.sigpolys(), a, fs, to)
            for g in basis.elems:
                c2 = (g.lp, a.k)
                if not fk:
                    ss.add(c2)
                    continue
                c1 = (pp_mul(fk.lp, g.sigpp), g.comp)
                if c1 != c2:
                    ss.add(to.max(c1, c2))
            if check and not _same_minimal_set(expected, ss.terms):
                raise InvariantViolation(f"syzygy signatures diverge at {a}: {expected} vs {ss.terms}")
            skip = ss.divides(a.sig)
        else:
            skip = _fast_sig_crit(basis, ss, rw, a)
        if check:
            ref = sig_crit(rw, to, basis.sigpolys(), ss.terms, a)
            if ref != skip:
                raise InvariantViolation(f"criterion mismatch at {a}: fast={skip} reference={ref}")
        if not skip:
            sp = SigPoly(a.sig, fs[a.k]) if isinstance(a, Unit) else _pair_poly(basis, a)
            p = basis.reduce(sp.sig, sp.poly)
            if not p:
                ss.add(sp.sig)
                z += 1
            else:
                b = SigPoly(sp.sig, p)
                added = _add_pairs(basis, b, keys, ps, to)
                if check:
                    _check_new_pairs(basis, b, added, keys, to)
                basis.append(b)
        if check:
            state = RBState(basis.sps, ss.terms, ps, z)
            _assert_ok(state, fs, to, checked, keys, queue_checked=True)
            checked = len(basis.elems)
        if hook is not None:
            hook(RBState(basis.sigpolys(), list(ss.terms), list(ps), z))
    return basis.sigpolys(), z


def _same_minimal_set(a: Sequence[Term], b: Sequence[Term]) -> bool:
    return set(a) == set(b)


def _assert_ok(state: RBState, fs, to, since: int = 0, ps_keys=None, queue_checked=False) -> None:
    problems = check_rb_invariant(state, fs, to, since, ps_keys, queue_checked)
    if problems:
        raise InvariantViolation("; ".join(problems))


def _fast_sig_crit(basis: _Basis, ss: _SyzSet, rw: str, e: SPair) -> bool:
    a, b = basis.elems[e.i], basis.elems[e.j]
    t = pp_lcm(a.lp, b.lp)
    u_a = (pp_mul(pp_div(t, a.lp), a.sigpp), a.comp)
    u_b = (pp_mul(pp_div(t, b.lp), b.sigpp), b.comp)
    for u, idx in ((u_a, e.i), (u_b, e.j)):
        if ss.divides(u) or not basis.is_canon(rw, u, idx):
            return True
    return False


def _pair_poly(basis: _Basis, e: SPair) -> SigPoly:
    a, b = basis.elems[e.j], basis.elems[e.i]
    return SigPoly(e.sig, spoly(a.poly, b.poly))


def _check_new_pairs(basis: _Basis, b: SigPoly, added: List[tuple], keys: List[tuple], to: TermOrder) -> None:
    """Compare freshly queued pairs with the reference ``add_spairs`` and check
    that each sits in sorted position with valid indices."""
    gs = basis.sigpolys()
    expected = [(_entry_key(to, e), e) for e in add_spairs([], gs, b, to)]
    if sorted(added) != expected:
        raise InvariantViolation(f"queued pairs diverge from add_spairs: {added} vs {expected}")
    n = len(gs) + 1
    for k, e in added:
        if not 0 <= e.i < e.j < n:
            raise InvariantViolation(f"queue entry {e} references invalid indices")
        lo = bisect.bisect_left(keys, k)
        hi = bisect.bisect_right(keys, k)
        if lo == hi or (lo and keys[lo - 1] > k) or (hi < len(keys) and keys[hi] < k):
            raise InvariantViolation(f"queue entry {e} is not in sorted position")


def _add_pairs(basis: _Basis, b: SigPoly, keys: list, ps: list, to: TermOrder) -> List[tuple]:
    j = len(basis.elems)
    blp = b.poly.lp
    bsigpp, bcomp = b.sig
    key = to.key
    added = []
    for i, g in enumerate(basis.elems):
        t = pp_lcm(g.lp, blp)
        u_g = (pp_mul(pp_div(t, g.lp), g.sigpp), g.comp)
        u_b = (pp_mul(pp_div(t, blp), bsigpp), bcomp)
        if u_g == u_b:
            continue
        kg, kb = key(u_g), key(u_b)
        sig, k = (u_b, kb) if kg < kb else (u_g, kg)
        sk, e = (k, 1, i, j), SPair(i, j, sig)
        pos = bisect.bisect_right(keys, sk)
        keys.insert(pos, sk)
        ps.insert(pos, e)
        added.append((sk, e))
    return added


def gb_sig(fs: Sequence[Polynomial], order=None, position="pot", rewrite: str = "rat", *,
           check: bool = False) -> Tuple[List[Polynomial], int]:
    """Gröbner basis of ``fs`` (the polynomials of the rewrite basis) and the zero-reduction count."""
    basis, z = rb(fs, order, position, rewrite, check=check)
    return [g.poly for g in basis], z
