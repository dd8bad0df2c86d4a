"""Zero-reduction counts of the signature algorithm vs Buchberger on the benchmark families.

    python3 scripts/table1.py --json table1.json
"""

import argparse
import json
from dataclasses import asdict, dataclass

from sigbasis.bench import BenchSpec, run_bench

SYSTEMS = [("cyclic", 5), ("cyclic", 6), ("katsura", 5), ("katsura", 6),
           ("eco", 8), ("eco", 9), ("noon", 5), ("noon", 6)]


@dataclass
class Config:
    order: str = "degrevlex"
    module_order: str = "pot"
    rewrite: str = "rat"
    skip_buchberger: bool = False


def run(cfg: Config):
    rows = []
    for family, n in SYSTEMS:
        sig = run_bench(BenchSpec(family, n, cfg.order, cfg.module_order, cfg.rewrite, "sig"))
        row = {"system": f"{family}-{n}", "sig_zeros": sig["zero_reductions"], "sig_size": sig["basis_size"],
               "sig_ms": sig["time_ms"]}
        if not cfg.skip_buchberger:
            bb = run_bench(BenchSpec(family, n, cfg.order, algorithm="buchberger"))
            row.update(buch_zeros=bb["zero_reductions"], buch_size=bb["basis_size"], buch_ms=bb["time_ms"])
        rows.append(row)
        print(" ".join(f"{k}={v}" for k, v in row.items()), flush=True)
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", default="degrevlex")
    ap.add_argument("--module-order", default="pot")
    ap.add_argument("--rewrite", default="rat")
    ap.add_argument("--skip-buchberger", action="store_true")
    ap.add_argument("--json", help="write the rows to this file")
    a = ap.parse_args()
    cfg = Config(a.order, a.module_order, a.rewrite, a.skip_buchberger)
    rows = run(cfg)
    if a.json:
        with open(a.json, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
