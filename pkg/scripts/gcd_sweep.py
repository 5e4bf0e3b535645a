#!/usr/bin/env python3
"""Time the gcd-dichotomy sweep at a configurable window size.

Sweeps h in 2..6 and s, t over a square grid on both carriers, running the
full oracle check per parameter triple, and reports throughput.

Example:
    python scripts/gcd_sweep.py --window 10000 --span 10
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from nonbasis import report
from nonbasis.families import Params, gcd_case
from nonbasis.intset import Window


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--window", type=int, default=10**4)
    ap.add_argument("--span", type=int, default=10, help="|s|, |t| sweep bound")
    ap.add_argument("--uniqueness-cap", type=int, default=2000)
    args = ap.parse_args()

    wz = Window(-args.window, args.window)
    wn = Window(0, args.window)
    t0 = time.perf_counter()
    stats = {"families": 0, "nonbasis": 0, "basis": 0, "failures": 0}
    for domain, window, lo in (("z", wz, -args.span), ("n0", wn, 0)):
        for h in range(2, 7):
            for s in range(lo, args.span + 1):
                for t in range(lo, args.span + 1):
                    params = Params(h, s, t, domain)
                    checks = report.dichotomy_checks(params, window)
                    if gcd_case(h, s, t).d >= 2:
                        stats["nonbasis"] += 1
                    else:
                        stats["basis"] += 1
                        checks.append(
                            report.uniqueness_check(params, args.uniqueness_cap)
                        )
                    stats["families"] += 1
                    stats["failures"] += sum(
                        1 for c in checks if c.status != report.PASS
                    )
    dt = time.perf_counter() - t0
    print(
        f"{stats['families']} families on window ±{args.window} "
        f"({stats['nonbasis']} nonbasis, {stats['basis']} basis cases): "
        f"{stats['failures']} failures in {dt:.2f}s "
        f"({stats['families'] / dt:.0f} families/s)"
    )
    return 0 if stats["failures"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
