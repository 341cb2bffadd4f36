"""Print the bound comparison table: general bound vs. the earlier estimates."""

from __future__ import annotations

import argparse
import json

from schurbound import bounds
from schurbound.fixtures import TABLE1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = []
    for params, general, comparison in TABLE1:
        rows.append({
            "params": list(params),
            "thm33": bounds.exp_thm33(params).effective,
            "rai_ineq4": bounds.exp_rai_ineq4(params).effective,
            "rai_thm14": bounds.exp_rai_thm14(params).effective,
            "published": [general, comparison],
        })
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'(p, n, d, delta, k, k')':<26} {'thm33':>6} {'ineq4':>6} {'thm14':>6}  published")
    for r in rows:
        ok = "ok" if [r["thm33"], r["rai_ineq4"]] == r["published"] else "MISMATCH"
        print(f"{str(tuple(r['params'])):<26} {r['thm33']:>6} {r['rai_ineq4']:>6} {r['rai_thm14']:>6}  {r['published']} {ok}")


if __name__ == "__main__":
    main()
