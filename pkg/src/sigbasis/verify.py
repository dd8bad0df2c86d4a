"""Independent correctness checks on computed bases."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence

from .baseline import buchberger
from .order import TermOrder, as_monomial_order, pp_coprime, pp_divides, pp_lcm
from .poly import Polynomial, ReducerSet, autoreduce, spoly
from .sigcore import SigPoly, _resolve_orders, is_sig_red, rb


def _in_order(polys: Sequence[Polynomial], order) -> List[Polynomial]:
    if order is None or not polys:
        return list(polys)
    ring = polys[0].ring.with_order(as_monomial_order(order))
    return [p.to_ring(ring) for p in polys]


def is_groebner_basis(G: Sequence[Polynomial], order=None) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero modulo ``G``.

    Pairs are visited by increasing lcm degree.  A pair is certified without
    reduction if its leading power-products are coprime, or if some ``k`` has
    ``lp_k | lcm`` with both pairs ``(i, k)`` and ``(k, j)`` already certified.
    Both shortcuts are theorems, so the answer equals the exhaustive check.
    """
    G = [g for g in _in_order(G, order) if g]
    lps = [g.lp for g in G]
    reducers = ReducerSet(G)
    pairs = sorted((sum(pp_lcm(lps[i], lps[j])), i, j) for j in range(len(G)) for i in range(j))
    done = set()
    for _, i, j in pairs:
        t = pp_lcm(lps[i], lps[j])
        ok = pp_coprime(lps[i], lps[j]) or any(
            k != i and k != j and pp_divides(lps[k], t)
            and (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done
            for k in range(len(G)))
        if not ok and reducers.normal_form(spoly(G[i], G[j])):
            return False
        done.add((i, j))
    return True


def is_groebner_basis_exhaustive(G: Sequence[Polynomial], order=None) -> bool:
    """Reference version of :func:`is_groebner_basis` that reduces every S-polynomial."""
    G = [g for g in _in_order(G, order) if g]
    reducers = ReducerSet(G)
    return all(not reducers.normal_form(spoly(G[i], G[j])) for j in range(len(G)) for i in range(j))


def check_containment(fs: Sequence[Polynomial], G: Sequence[Polynomial], order=None) -> bool:
    """Whether every ``f`` in ``fs`` reduces to zero modulo the Gröbner basis ``G``."""
    G = _in_order(G, order)
    ring = G[0].ring if G else None
    reducers = ReducerSet(G)
    for f in fs:
        if ring is not None:
            f = f.to_ring(ring)
        if reducers.normal_form(f):
            return False
    return True


def is_min_sig_gb(B: Sequence[SigPoly], to: TermOrder) -> bool:
    """No element is top s-reducible (non-strict signature bound) by the others."""
    for k, b in enumerate(B):
        rest = list(B[:k]) + list(B[k + 1:])
        if is_sig_red("<=", "=", to, rest, b):
            return False
    return True


@dataclass
class CrossCheckReport:
    passed: bool
    order: str
    module_order: str
    rewrite: str
    sig_basis_size: int
    sig_zero_reductions: int
    buchberger_basis_size: int
    buchberger_zero_reductions: int
    reduced_basis: List[str]
    checks: Dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)

    def __str__(self) -> str:
        lines = [
            f"cross-check {'PASS' if self.passed else 'FAIL'} "
            f"({self.order}, {self.module_order}, {self.rewrite})",
            f"  gb_sig:     {self.sig_basis_size} elements, {self.sig_zero_reductions} zero-reductions",
            f"  buchberger: {self.buchberger_basis_size} elements, {self.buchberger_zero_reductions} zero-reductions",
        ]
        for name, ok in self.checks.items():
            lines.append(f"  [{'ok' if ok else 'FAILED'}] {name}")
        lines.append(f"  reduced basis ({len(self.reduced_basis)}):")
        lines.extend(f"    {p}" for p in self.reduced_basis)
        return "\n".join(lines)


@dataclass
class BaselineResult:
    """Buchberger's output on one system and order, with the checks that depend only on it."""

    basis: List[Polynomial]
    zeros: int
    reduced: List[Polynomial]
    is_gb: bool
    contains_inputs: bool


def baseline_result(fs: Sequence[Polynomial], order="degrevlex") -> BaselineResult:
    """Run the baseline once; the result can be shared by every module order and rewrite order."""
    fs = _in_order(fs, order)
    G, zeros = buchberger(fs, order)
    # the GB check is reported alongside, so the reduced form may assume it
    return BaselineResult(G, zeros, autoreduce(G, groebner=True), is_groebner_basis(G), check_containment(fs, G))


def cross_check(fs: Sequence[Polynomial], order="degrevlex", position="pot", rewrite="rat",
                check_invariants: bool = False, baseline: Optional[BaselineResult] = None) -> CrossCheckReport:
    """Compare gb_sig against buchberger on ``fs`` and run every basis check.

    The reverse inclusion (gb_sig output inside the input ideal) is checked
    against the baseline's reduced basis, which generates the input ideal.
    ``baseline`` may carry a precomputed :func:`baseline_result` for the same
    system and monomial order.
    """
    fs, to = _resolve_orders(fs, order, position)
    sig_basis, z_sig = rb(fs, to.mo, to, rewrite, check=check_invariants)
    G_sig = [g.poly for g in sig_basis]
    if baseline is None:
        baseline = baseline_result(fs, to.mo)
    red_sig = autoreduce(G_sig, groebner=True)
    checks = {
        "reduced bases equal": red_sig == baseline.reduced,
        "gb_sig output is a Groebner basis": is_groebner_basis(G_sig),
        "buchberger output is a Groebner basis": baseline.is_gb,
        "inputs contained in gb_sig ideal": check_containment(fs, G_sig),
        "inputs contained in buchberger ideal": baseline.contains_inputs,
        "gb_sig output contained in input ideal": check_containment(red_sig, baseline.reduced),
    }
    if rewrite == "rat":
        checks["minimal signature Groebner basis"] = is_min_sig_gb(sig_basis, to)
    return CrossCheckReport(
        passed=all(checks.values()),
        order=to.mo.kind,
        module_order=to.position,
        rewrite=rewrite,
        sig_basis_size=len(G_sig),
        sig_zero_reductions=z_sig,
        buchberger_basis_size=len(baseline.basis),
        buchberger_zero_reductions=baseline.zeros,
        reduced_basis=[str(p) for p in red_sig],
        checks=checks,
    )
