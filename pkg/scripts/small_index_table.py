"""Tabulate Hopf images of rho_Q for M=N=2 and M=3, N=2 next to the small-index predictions.

    python scripts/small_index_table.py --max-order 24
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from hopfquot.image import QSpec, classify_small_index, hopf_image
from hopfquot.scalars import UnitGroupSpec


@dataclass
class TableConfig:
    max_order: int = 24
    build: bool = False


def rows_22(cfg: TableConfig):
    for m in list(range(1, cfg.max_order + 1)) + [None]:
        spec = UnitGroupSpec.of(q=m)
        q = QSpec.from_exponents(2, 2, spec, [[{}, {}], [{}, {"q": 1}]])
        yield f"o(q)={m or 'inf'}", q


def rows_32(cfg: TableConfig):
    for order in range(2, cfg.max_order + 1):
        spec = UnitGroupSpec.of(z=order)
        yield f"p=q, o(p)={order}", QSpec.from_exponents(3, 2, spec, [[{}, {}], [{}, {"z": 1}], [{}, {"z": 1}]])
    for a, b in [(8, 5), (4, 5), (8, 7), (5, 7)]:
        spec = UnitGroupSpec.of(p=a, q=b)
        yield f"o(p)={a}, o(q)={b}", QSpec.from_exponents(3, 2, spec, [[{}, {}], [{}, {"p": 1}], [{}, {"q": 1}]])


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=24)
    ap.add_argument("--build", action="store_true", help="also build each finite image and check the factorization")
    args = ap.parse_args(argv)
    cfg = TableConfig(args.max_order, args.build)
    mismatches = 0
    for title, rows in (("M=N=2", rows_22(cfg)), ("M=3, N=2", rows_32(cfg))):
        print(f"\n{title}")
        print(f"{'parameters':<22} {'T/U':<14} {'dim':>6} {'class':<8} {'Phi':<6} {'predicted':<22} {'s':>6}")
        for label, q in rows:
            t = time.perf_counter()
            r = hopf_image(q, build=cfg.build)
            pred = classify_small_index(q)
            ptxt = pred["classification"] or "-"
            if pred["invariant_factors"] is not None and pred["classification"] == "CUSTOM":
                ptxt += str(list(pred["invariant_factors"]))
            agree = pred["classification"] is None or (
                r.classification == pred["classification"]
                and (pred["invariant_factors"] is None or r.quotient.invariant_factors == tuple(pred["invariant_factors"]))
            )
            mismatches += not agree
            dim = "inf" if r.dimension == float("inf") else r.dimension
            phi = "triv" if r.phi_trivial else "twist"
            flag = "" if agree else "  <-- mismatch"
            print(f"{label:<22} {str(r.quotient):<14} {dim:>6} {r.classification:<8} {phi:<6} {ptxt:<22} {time.perf_counter() - t:6.2f}{flag}")
    print(f"\nmismatches: {mismatches}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
