"""Build A(m) and B(m), verify the Hopf axioms and the exact sequence, and identify small members.

    python scripts/verify_families.py --max-m 8
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from hopfquot.datum import family_datum
from hopfquot.groups import cyclic, dihedral, direct_product, is_isomorphic
from hopfquot.hopf import build_twisted_quotient, compute_character_group, verify_exact_sequence, verify_hopf_axioms


@dataclass
class FamilyConfig:
    max_m: int = 6
    exhaustive: bool | None = None


KNOWN = {
    ("A", 1): ("Z2 x Z2", direct_product(cyclic(2), cyclic(2))),
    ("B", 1): ("Z4", cyclic(4)),
    ("A", 2): ("D4", dihedral(4)),
}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=6)
    ap.add_argument("--exhaustive", action="store_true", default=None)
    args = ap.parse_args(argv)
    cfg = FamilyConfig(args.max_m, args.exhaustive)
    failures = 0
    print(f"{'algebra':<8} {'dim':>4} {'axioms':<7} {'exact':<6} {'comm':<5} {'cocomm':<6} {'characters':<12} {'s':>6}")
    for m in range(1, cfg.max_m + 1):
        for name in ("A", "B"):
            t = time.perf_counter()
            A = build_twisted_quotient(family_datum(m, name == "B"))
            ax = verify_hopf_axioms(A, exhaustive=cfg.exhaustive)
            ex = verify_exact_sequence(A)
            chars = "-"
            if A.is_commutative():
                G = compute_character_group(A)
                chars = f"order {G.order}"
                if (name, m) in KNOWN:
                    label, ref = KNOWN[(name, m)]
                    ok = is_isomorphic(G, ref)
                    chars = label if ok else f"not {label}"
                    failures += not ok
            failures += (not ax.passed) + (not ex.passed)
            print(
                f"{name}({m}){'':<{6 - len(str(m))}} {A.dim:>4} {'ok' if ax.passed else 'FAIL':<7} "
                f"{'ok' if ex.passed else 'FAIL':<6} {str(A.is_commutative()):<5} {str(A.is_cocommutative()):<6} "
                f"{chars:<12} {time.perf_counter() - t:6.2f}"
            )
    print(f"\nfailures: {failures}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
