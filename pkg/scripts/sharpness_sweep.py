"""Exact multiplier of the capable construction vs. the general bound."""

from __future__ import annotations

import argparse
import time

from schurbound.sweeps import run_sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", default="sharpness:p=3,5;delta=2..6;a=0..2")
    ap.add_argument("--parallel", type=int, default=1)
    args = ap.parse_args()
    start = time.perf_counter()
    res = run_sweep(args.grid, args.parallel)
    print(f"{res.cases} cases, {res.violations} violations, {time.perf_counter() - start:.2f}s")
    for f in res.failures:
        print("  FAIL", f)
    raise SystemExit(0 if res.violations == 0 else 3)


if __name__ == "__main__":
    main()
