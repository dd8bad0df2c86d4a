"""Trace the signature algorithm on the two-generator example and print every basis element."""

import argparse

from sigbasis.poly import Ring
from sigbasis.sigcore import rb
from sigbasis.textio import format_poly


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--module-order", default="pot")
    ap.add_argument("--rewrite", default="rat")
    a = ap.parse_args()

    # X has the lowest priority; see the ledger entry on variable precedence
    ring = Ring("Z,Y,X", "degrevlex")
    Z, Y, X = ring.gens
    fs = [X**2 * Z**3 + 3 * X**2 * Y, X * Y * Z + 2 * Y**2]
    names = ["Z", "Y", "X"]

    def show(state):
        g = state.gs[-1]
        pp, k = g.sig
        sig = format_poly(ring.monomial(pp), names)
        print(f"  step: basis {len(state.gs)}, syzygies {len(state.ss)}, queue {len(state.ps)}, "
              f"new sig ({sig}, e{k})")

    seen = [0]

    def hook(state):
        if len(state.gs) > seen[0]:
            seen[0] = len(state.gs)
            show(state)

    basis, zeros = rb(fs, "degrevlex", a.module_order, a.rewrite, check=True, hook=hook)
    print(f"basis ({len(basis)} elements, {zeros} zero-reductions):")
    for g in basis:
        print("  " + format_poly(g.poly, names))


if __name__ == "__main__":
    main()
