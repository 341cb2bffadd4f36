"""Analyze every shipped alternating map and print a one-line summary each."""

from __future__ import annotations

import argparse
from importlib import resources

from schurbound import analyze_map, load_altmap


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.parse_args()
    data = resources.files("schurbound") / "data"
    for name in ("example1.json", "example3.json", "intro_g.json", "intro_h.json", "special.json"):
        rep = analyze_map(load_altmap(data / name), source=name)
        eff = {b["name"]: b["effective"] for b in rep.bounds}
        exact = rep.exact["schur"] if rep.exact else "-"
        print(
            f"{name:<14} delta={rep.invariants['delta']} |W|={rep.script_w_size} "
            f"psi={rep.ranks['dim_psi_U']}/{rep.ranks['dim_psi_bar']} exact={exact} "
            f"ew_chain={eff.get('ew_chain', '-')} thm33={eff.get('thm33', '-')} {rep.capability or ''}"
        )


if __name__ == "__main__":
    main()
