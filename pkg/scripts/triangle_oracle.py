"""Exhaustive maximum triangle counts vs. the closed form, per edge count."""

from __future__ import annotations

import argparse
import time

from schurbound.trigraph import brute_force_max_triangles, max_triangles_formula, rt_decompose


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--vertices", type=int, default=7)
    ap.add_argument("--max-edges", type=int, default=12)
    ap.add_argument("--parallel", type=int, default=1)
    args = ap.parse_args()
    bad = 0
    print(f"{'e':>3} {'r':>3} {'t':>3} {'formula':>8} {'oracle':>7} {'sec':>6}")
    for e in range(args.max_edges + 1):
        start = time.perf_counter()
        got = brute_force_max_triangles(e, args.vertices, workers=args.parallel)
        want = max_triangles_formula(e)
        rt = rt_decompose(e)
        bad += got != want
        print(f"{e:>3} {rt.r:>3} {rt.t:>3} {want:>8} {got:>7} {time.perf_counter() - start:>6.2f}")
    raise SystemExit(0 if bad == 0 else 3)


if __name__ == "__main__":
    main()
