"""Benchmark-system generators and the statistics runner."""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass
from typing import Dict, List, Tuple

from .baseline import buchberger
from .order import as_monomial_order
from .poly import Polynomial, Ring
from .sigcore import REWRITE_KINDS, gb_sig

FAMILIES = ("cyclic", "katsura", "eco", "noon")
ALGORITHMS = ("sig", "buchberger")
_MIN_N = {"cyclic": 2, "katsura": 1, "eco": 3, "noon": 1}


@dataclass(frozen=True)
class BenchSpec:
    family: str
    n: int
    order: str = "degrevlex"
    module_order: str = "pot"
    rewrite: str = "rat"
    algorithm: str = "sig"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.n < _MIN_N[self.family]:
            raise ValueError(f"{self.family}-n needs n >= {_MIN_N[self.family]}, got {self.n}")
        as_monomial_order(self.order)
        if self.module_order not in ("pot", "top"):
            raise ValueError(f"unknown module order {self.module_order!r}")
        if self.rewrite not in REWRITE_KINDS:
            raise ValueError(f"unknown rewrite order {self.rewrite!r}")
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")


def _cyclic(n: int, order) -> Tuple[Ring, List[Polynomial]]:
    ring = Ring([f"x{i}" for i in range(n)], order)
    x = ring.gens
    fs = []
    for k in range(1, n):
        f = ring.zero
        for i in range(n):
            m = ring.one
            for j in range(k):
                m = m * x[(i + j) % n]
            f = f + m
        fs.append(f)
    prod = ring.one
    for v in x:
        prod = prod * v
    fs.append(prod - 1)
    return ring, fs


def _katsura(n: int, order) -> Tuple[Ring, List[Polynomial]]:
    ring = Ring([f"u{i}" for i in range(n + 1)], order)
    u = ring.gens

    def var(j: int) -> Polynomial:
        j = abs(j)
        return u[j] if j <= n else ring.zero

    first = u[0] - 1
    for l in range(1, n + 1):
        first = first + 2 * u[l]
    fs = [first]
    for m in range(n):
        f = -u[m]
        for l in range(-n, n + 1):
            f = f + var(l) * var(m - l)
        fs.append(f)
    return ring, fs


def _eco(n: int, order) -> Tuple[Ring, List[Polynomial]]:
    ring = Ring([f"x{i}" for i in range(1, n + 1)], order)
    x = (None,) + ring.gens  # 1-based
    fs = []
    for k in range(1, n - 1):
        inner = x[k]
        for i in range(1, n - k):
            inner = inner + x[i] * x[i + k]
        fs.append(x[n] * inner - k)
    last = ring.one
    for i in range(1, n):
        last = last + x[i]
    fs.append(last)
    return ring, fs


def _noon(n: int, order) -> Tuple[Ring, List[Polynomial]]:
    ring = Ring([f"x{i}" for i in range(1, n + 1)], order)
    x = ring.gens
    fs = []
    for i in range(n):
        sq = ring.zero
        for j in range(n):
            if j != i:
                sq = sq + x[j] * x[j]
        fs.append(10 * x[i] * sq - 11 * x[i] + 10)
    return ring, fs


_GENERATORS = {"cyclic": _cyclic, "katsura": _katsura, "eco": _eco, "noon": _noon}


def gen_system(family: str, n: int, order="degrevlex") -> Tuple[int, List[Polynomial]]:
    """Return ``(variable count, polynomials)`` for a named benchmark system."""
    BenchSpec(family, n)
    ring, fs = gen_ring_system(family, n, order)
    return ring.nvars, fs


def gen_ring_system(family: str, n: int, order="degrevlex") -> Tuple[Ring, List[Polynomial]]:
    BenchSpec(family, n)
    return _GENERATORS[family](n, order)


def run_bench(spec: BenchSpec) -> Dict[str, object]:
    """Run one benchmark and return its JSON-ready statistics record."""
    _, fs = gen_ring_system(spec.family, spec.n, spec.order)
    start = time.perf_counter()
    if spec.algorithm == "sig":
        basis, zeros = gb_sig(fs, spec.order, spec.module_order, spec.rewrite)
    else:
        basis, zeros = buchberger(fs, spec.order)
    elapsed = time.perf_counter() - start
    record = asdict(spec)
    record.update(basis_size=len(basis), zero_reductions=zeros, time_ms=int(round(elapsed * 1000)))
    return record


def random_system(seed: int, max_vars: int = 3, max_polys: int = 3, max_degree: int = 3,
                  coeff_range: int = 5, max_terms: int = 4, order="degrevlex") -> Tuple[Ring, List[Polynomial]]:
    """Seeded random system in ``max_vars`` variables with 2 to ``max_polys`` nonzero polynomials.

    Terms have total degree at most ``max_degree`` and integer coefficients in
    ``[-coeff_range, coeff_range]``.
    """
    rng = random.Random(seed)
    nvars = max_vars
    ring = Ring([f"x{i}" for i in range(nvars)], order)
    fs = []
    for _ in range(rng.randint(min(2, max_polys), max_polys)):
        d = {}
        while not d:
            for _ in range(rng.randint(1, max_terms)):
                deg = rng.randint(0, max_degree)
                pp = [0] * nvars
                for _ in range(deg):
                    pp[rng.randrange(nvars)] += 1
                c = rng.randint(-coeff_range, coeff_range)
                if c:
                    d[tuple(pp)] = c
        fs.append(ring.from_dict(d))
    return ring, fs
