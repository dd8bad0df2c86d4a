"""Buchberger's algorithm with the product and chain criteria.

Used as the independent oracle for the signature-based algorithm: both
must agree on the reduced Gröbner basis.
"""

from __future__ import annotations

import heapq
from typing import List, Sequence, Set, Tuple

from .order import as_monomial_order, pp_coprime, pp_divides, pp_lcm
from .poly import Polynomial, ReducerSet, spoly


def buchberger(fs: Sequence[Polynomial], order=None) -> Tuple[List[Polynomial], int]:
    """Return a Gröbner basis of ``fs`` and the number of S-polynomials reduced to zero.

    Pairs are processed by the sugar strategy: smallest sugar degree, then
    smallest lcm in the monomial order, then by index.  The sugar of an input
    is its total degree; a pair's sugar is ``max(sugar_i + deg(t / lp_i),
    sugar_j + deg(t / lp_j))`` with ``t`` the lcm.  A pair is skipped when the
    leading power-products are coprime, or when some other element ``k``
    (scanned by increasing index) has a leading power-product dividing the
    lcm and both pairs ``(i, k)`` and ``(j, k)`` are already treated.
    """
    fs = [f for f in fs if f]
    if not fs:
        return [], 0
    if order is not None:
        ring = fs[0].ring.with_order(as_monomial_order(order))
        fs = [f.to_ring(ring) for f in fs]
    G: List[Polynomial] = []
    reducers = ReducerSet()
    lps = []
    sugar: List[int] = []
    heap: List[tuple] = []
    mokey = fs[0].ring.order.key
    pending: Set[Tuple[int, int]] = set()
    zeros = 0

    def push_pairs(j: int) -> None:
        for i in range(j):
            t = pp_lcm(lps[i], lps[j])
            d = sum(t)
            s = max(sugar[i] + d - sum(lps[i]), sugar[j] + d - sum(lps[j]))
            heapq.heappush(heap, (s, mokey(t), i, j, t))
            pending.add((i, j))

    for f in fs:
        G.append(f)
        reducers.append(f)
        lps.append(f.lp)
        sugar.append(f.total_degree())
        push_pairs(len(G) - 1)

    while heap:
        s, _, i, j, t = heapq.heappop(heap)
        pending.discard((i, j))
        if pp_coprime(lps[i], lps[j]):
            continue
        if _chain_skip(i, j, t, lps, pending):
            continue
        h = reducers.normal_form(spoly(G[i], G[j]))
        if not h:
            zeros += 1
            continue
        h = h.monic()
        G.append(h)
        reducers.append(h)
        lps.append(h.lp)
        sugar.append(max(s, h.total_degree()))
        push_pairs(len(G) - 1)
    return G, zeros


def _chain_skip(i: int, j: int, t, lps, pending) -> bool:
    for k in range(len(lps)):
        if k == i or k == j or not pp_divides(lps[k], t):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False
