#!/usr/bin/env python3
"""Watch a gapped family's sumset complement stabilize as the window grows.

Example:
    python scripts/complement_scan.py --h 2 --s 0 --t 1 --domain n0 \
        --gap geometric,2,1 --start 50 --factor 4 --steps 5
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from nonbasis import grammar, report, verify
from nonbasis.families import Params, build_gapped
from nonbasis.intset import Window


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--h", type=int, default=2)
    ap.add_argument("--s", type=int, default=0)
    ap.add_argument("--t", type=int, default=1)
    ap.add_argument("--domain", choices=["z", "n0"], default="n0")
    ap.add_argument("--gap", default="geometric,2,1")
    ap.add_argument("--start", type=int, default=50, help="first window size")
    ap.add_argument("--factor", type=int, default=4, help="growth per step")
    ap.add_argument("--steps", type=int, default=5)
    args = ap.parse_args()

    fam = build_gapped(
        Params(args.h, args.s, args.t, args.domain),
        grammar.parse_generator(args.gap),
    )
    print(f"family: {grammar.format_spec(fam.spec)}")
    bound = verify.exceptional_bound(fam) if args.domain == "n0" else None
    if bound is not None:
        print(f"certified exceptional bound: {bound}")

    hi = args.start
    prev_exceptional = None
    for _ in range(args.steps):
        window = Window(0, hi) if args.domain == "n0" else Window(-hi, hi)
        t0 = time.perf_counter()
        cat = verify.complement_catalog(fam, window, crosscheck=False)
        dt = time.perf_counter() - t0
        marker = ""
        if prev_exceptional is not None and cat.exceptional == prev_exceptional:
            marker = "  (exceptional set stable)"
        print(
            f"window {window.lo}:{window.hi}  "
            f"shifted={len(cat.shifted_y)}  "
            f"exceptional={report.format_ranges(list(cat.exceptional))}  "
            f"unknown={len(cat.unknown)}  [{dt:.3f}s]{marker}"
        )
        prev_exceptional = cat.exceptional
        hi *= args.factor
    return 0


if __name__ == "__main__":
    sys.exit(main())
