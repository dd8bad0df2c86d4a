"""Cross-check gb_sig against Buchberger over orders, module orders and rewriters.

    python3 scripts/oracle_matrix.py --seeds 20
"""

import argparse
import itertools
import time

from sigbasis.bench import gen_ring_system, random_system
from sigbasis.verify import baseline_result, cross_check

FAMILIES = [("cyclic", 4), ("cyclic", 5), ("katsura", 3), ("katsura", 4), ("eco", 5), ("noon", 3), ("noon", 4)]
ORDERS = ("lex", "deglex", "degrevlex")
CONFIGS = list(itertools.product(("pot", "top"), ("rat", "add")))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--check-invariants", action="store_true")
    a = ap.parse_args()

    systems = [(f"{f}-{n}", gen_ring_system(f, n)[1]) for f, n in FAMILIES]
    systems += [(f"random-{s}", random_system(s)[1]) for s in range(a.seeds)]
    failures = 0
    for name, fs in systems:
        for order in ORDERS:
            start = time.perf_counter()
            base = baseline_result(fs, order)
            marks = []
            for position, rewrite in CONFIGS:
                rep = cross_check(fs, order, position, rewrite, a.check_invariants, baseline=base)
                failures += not rep.passed
                marks.append(f"{position}/{rewrite}:{'ok' if rep.passed else 'FAIL'} z={rep.sig_zero_reductions}")
            print(f"{name:12} {order:9} buch z={base.zeros:<4} " + "  ".join(marks)
                  + f"  ({time.perf_counter() - start:.1f}s)", flush=True)
    print(f"{failures} failing configurations")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
