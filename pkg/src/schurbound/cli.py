"""Command-line front end.

Exit codes: 0 success, 2 input error (bad file, bad parameters, infeasible
request), 3 internal consistency failure (a computed inequality or published
value that should hold did not).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bounds
from .altmap import load_altmap, serialize_altmap
from .errors import InvalidParams, SchurBoundError
from .grouplab import capability_ellis, construct_thm43, invariants, schur_exponent_exact, to_presentation
from .report import analyze_map, format_report
from .sweeps import run_sweep
from .trigraph import brute_force_max_triangles, extremal_graph, max_triangles_formula, rt_decompose
from .verify import verify_all

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


def _emit(obj, as_json: bool, text: str):
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)


def _parse_order(text: str | None):
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InvalidParams(f"--order must be a comma-separated permutation, got {text!r}") from exc


def cmd_analyze(args) -> int:
    A = load_altmap(args.input)
    rep = analyze_map(A, _parse_order(args.order), source=str(args.input))
    _emit(rep.as_dict(), args.json, format_report(rep))
    return EXIT_OK


def cmd_bounds(args) -> int:
    P = bounds.PGroupParams(args.p, args.n, args.d, args.delta, args.k, args.kprime)
    rep = bounds.compare_report(P)
    doc = {"params": rep["params"], "bounds": [e.as_dict() for e in rep["bounds"]], "flags": rep["flags"]}
    lines = [" ".join(f"{k}={v}" for k, v in rep["params"].items())]
    for e in doc["bounds"]:
        lines.append(f"{e['name']:<12} p^{e['effective']}  (exponent {e['exact']})")
    lines += [f"{k}: {v}" for k, v in rep["flags"].items()]
    _emit(doc, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_construct(args) -> int:
    G = construct_thm43(args.p, args.d, args.delta, args.k)
    inv = invariants(G)
    exact = schur_exponent_exact(G)
    bound = bounds.exp_thm33(inv.params())
    if exact != bound.effective:
        raise AssertionError(f"construction gives p^{exact}, general bound is p^{bound.effective}")
    out = Path(args.out)
    out.write_text(serialize_altmap(G.map) + "\n", encoding="utf-8")
    pres = out.with_suffix(".presentation.txt")
    pres.write_text(to_presentation(G), encoding="utf-8")
    doc = {
        "invariants": inv.as_dict(),
        "schur_exponent": exact,
        "thm33": str(bound.exact),
        "capability": capability_ellis(G).status,
        "altmap_file": str(out),
        "presentation_file": str(pres),
    }
    text = (
        f"wrote {out} and {pres}\n"
        f"invariants: " + " ".join(f"{k}={v}" for k, v in inv.as_dict().items()) + "\n"
        f"|M| = p^{exact} (general bound p^{bound.effective}); {doc['capability']}"
    )
    _emit(doc, args.json, text)
    return EXIT_OK


def cmd_sweep(args) -> int:
    start = time.perf_counter()
    res = run_sweep(args.grid, args.parallel)
    doc = res.as_dict()
    text = [f"{'kind':<10} {'cases':>7} {'passed':>7} {'violations':>10}"]
    if res.cases:
        text.append(f"{res.kind:<10} {res.cases:>7} {res.passed:>7} {res.violations:>10}")
    for f in res.failures[:20]:
        text.append(f"  FAIL {f}")
    text.append(f"time: {time.perf_counter() - start:.2f}s")
    _emit(doc, args.json, "\n".join(text))
    return EXIT_OK if res.violations == 0 else EXIT_INTERNAL


def cmd_triangles(args) -> int:
    e = args.edges
    if e < 0:
        raise InvalidParams(f"--edges must be >= 0; got {e}")
    rt = rt_decompose(e)
    G = extremal_graph(e)
    doc = {
        "edges": e,
        "r": rt.r,
        "t": rt.t,
        "max_triangles": max_triangles_formula(e),
        "extremal_vertices": G.v,
        "extremal_edges": [list(x) for x in G.sorted_edges()],
    }
    lines = [
        f"e={e} = C({rt.r},2) + {rt.t}",
        f"max triangles: {doc['max_triangles']}",
        "extremal graph: " + " ".join("%d-%d" % x for x in G.sorted_edges()),
    ]
    if args.oracle:
        v = args.max_vertices
        oracle = brute_force_max_triangles(e, v, work_cap=args.work_cap, workers=args.parallel)
        doc["oracle"] = {"max_vertices": v, "max_triangles": oracle, "agrees": oracle == doc["max_triangles"]}
        lines.append(f"oracle on {v} vertices: {oracle} ({'agrees' if oracle == doc['max_triangles'] else 'DISAGREES'})")
    _emit(doc, args.json, "\n".join(lines))
    if args.oracle and not doc["oracle"]["agrees"]:
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    results = verify_all(args.fixtures)
    counts = {s: sum(r.status == s for r in results) for s in ("pass", "documented-mismatch", "fail")}
    ok = counts["fail"] == 0
    doc = {"ok": ok, "counts": counts, "fixtures": [r.as_dict() for r in results]}
    lines = []
    for r in results:
        line = f"{r.status:<20} {r.id}"
        if r.status != "pass":
            line += f"  expected={json.dumps(r.expected)} observed={json.dumps(r.observed)}"
        if r.status == "documented-mismatch" and r.note:
            line += f"  ({r.note})"
        lines.append(line)
    lines.append(
        f"{counts['pass']} pass, {counts['documented-mismatch']} documented-mismatch, {counts['fail']} fail"
    )
    _emit(doc, args.json, "\n".join(lines))
    return EXIT_OK if ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="schurbound", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for an alternating-map JSON document")
    p.add_argument("--input", required=True, help="AltMap JSON file")
    p.add_argument("--order", help="comma-separated permutation, least generator first")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bounds", help="evaluate every bound for a parameter tuple")
    for name in ("p", "n", "d", "delta", "k", "kprime"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="build the capable group meeting the general bound")
    for name in ("p", "d", "delta", "k"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--out", required=True, help="AltMap JSON output; the presentation goes next to it")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("sweep", help="run a parameter sweep, e.g. 'sharpness:p=3,5;delta=2..6'")
    p.add_argument("--grid", required=True)
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("triangles", help="maximum triangle count for a given edge count")
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="confirm by exhaustive search")
    p.add_argument("--max-vertices", type=int, default=7)
    p.add_argument("--work-cap", type=int, default=5_000_000)
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_triangles)

    p = sub.add_parser("verify-paper", help="check every published value in the fixture store")
    p.add_argument("--fixtures", help="alternative fixture store (JSON)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_paper)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SchurBoundError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
