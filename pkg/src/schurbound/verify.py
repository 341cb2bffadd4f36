"""Runs the published-value fixture store.

The store is a JSON list of records::

    {"id": str, "check": str, "args": {...}, "expected": <json>,
     "mismatch": <json, optional>, "note": str}

``check`` names a function in ``CHECKS``; it receives ``args`` and returns a
JSON-comparable observation. A record passes when the observation equals
``expected``. Records carrying ``mismatch`` are published claims this library
is known to disagree with: observing exactly ``mismatch`` reports
``documented-mismatch`` (not a failure), anything else fails.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import bounds, fieldmat as fm
from .altmap import apply, radical
from .errors import MalformedDocument, SchurBoundError
from .fixtures import example1_map, example3_map, intro_group_g, intro_group_h, intro_map, special_group, special_map
from .greedy import construct_pair_basis, is_tree_of_height_one, pair_cmp
from .grouplab import (
    ClassTwoGroup,
    capability_ellis,
    construct_thm43,
    h2_exponent,
    invariants,
    multiplier_of_coprime_product,
    parse_presentation,
    schur_exponent_exact,
    to_presentation,
)
from .psirank import dim_im_psi, lb_special_thm38, psi_vector, script_w, w_vectors
from .trigraph import complement, count_triangles, extremal_graph, graph_of_pairset, rt_decompose

MAPS = {
    "example1": lambda p=3: example1_map(p),
    "example3": lambda p=3: example3_map(p),
    "intro_g": lambda p=3: intro_map(p),
    "special": lambda p=3: special_map(p),
}

GROUPS = {"intro_g": intro_group_g, "intro_h": intro_group_h, "special": special_group}

STATUSES = ("pass", "documented-mismatch", "fail")


def _map(args):
    try:
        return MAPS[args["map"]](args.get("p", 3))
    except KeyError as exc:
        raise MalformedDocument(f"unknown map {args.get('map')!r}") from exc


def _group(name) -> ClassTwoGroup:
    try:
        return GROUPS[name]()
    except KeyError as exc:
        raise MalformedDocument(f"unknown group {name!r}") from exc


def _greedy_pairs(args):
    return [list(x) for x in construct_pair_basis(_map(args)).pairs]


def _apply(args):
    A = _map(args)
    e = lambda i: [int(t == i - 1) for t in range(A.n)]  # noqa: E731
    return apply(A, e(args["x"]), e(args["y"]))


def _in_span(args):
    return fm.in_span(args["v"], args["S"], args["p"])


def _pair_cmp(args):
    return pair_cmp(args["a"], args["b"]).name


def _tree(args):
    ok, apex = is_tree_of_height_one(args["pairs"])
    return [ok, apex]


def _complement_triangles(args):
    A = _map(args)
    pb = construct_pair_basis(A)
    return count_triangles(complement(graph_of_pairset(pb.pairs, A.n)))


def _rt(args):
    d = rt_decompose(args["value"])
    return [d.r, d.t]


def _extremal(args):
    G = extremal_graph(args["edges"])
    return {"vertices": G.v, "edges": len(G.edges), "triangles": count_triangles(G)}


def _script_w(args):
    A = _map(args)
    return sorted(list(t) for t in script_w(construct_pair_basis(A).pairs, A.n))


def _example2_dependency(args):
    A = _map(args)
    p = A.p
    rows = [psi_vector(A, *t) for t in ((1, 2, 4), (1, 3, 4), (1, 4, 5))]
    dep = [(a + b) % p for a, b in zip(rows[0], rows[1])] == rows[2]
    W = w_vectors(A, construct_pair_basis(A).pairs)
    return {"dependency": dep, "w_rank": fm.rank(fm.FpMatrix.from_rows(W, p)), "w_size": len(W)}


def _bound(args):
    fn = {
        "thm33": bounds.exp_thm33,
        "rai_ineq4": bounds.exp_rai_ineq4,
        "rai_thm14": bounds.exp_rai_thm14,
    }[args["name"]]
    return fn(args["params"]).effective


def _thm38(args):
    return bounds.exp_thm38(args["p"], args["n"], args["d"], args["k"]).effective


def _lb38(args):
    return lb_special_thm38(args["d"], args["k"])


def _invariants(args):
    return invariants(_group(args["group"])).as_dict()


def _schur(args):
    return schur_exponent_exact(_group(args["group"]))


def _h2(args):
    return h2_exponent(_group(args["group"]))


def _dim_psi(args):
    return dim_im_psi(_map(args))


def _coprime(args):
    return [list(x) for x in multiplier_of_coprime_product([_group(g) for g in args["groups"]])]


def _capable_thm43(args):
    return sorted({capability_ellis(construct_thm43(*t)).status for t in args["cases"]})


def _presentation(args):
    G = _group(args["group"])
    text = to_presentation(G)
    back = parse_presentation(text)
    return {"contains": all(s in text for s in args["contains"]), "round_trip": back.map == G.map}


def _attains_thm33(args):
    G = _group(args["group"])
    return schur_exponent_exact(G) == bounds.exp_thm33(args["params"]).effective


def _product_attains(args):
    """Whether each factor's exact multiplier equals its per-prime formula bound."""
    exact = multiplier_of_coprime_product([_group(g) for g in args["groups"]])
    formula = bounds.exp_thm35_product(args["params"])
    return all(e == f.effective for (_, e), (_, f) in zip(exact, formula))


def _radical_dim(args):
    return len(radical(_map(args)))


def _w_contains(args):
    A = _map(args)
    return tuple(sorted(args["triple"])) in script_w(construct_pair_basis(A).pairs, A.n)


CHECKS = {
    "greedy_pairs": _greedy_pairs,
    "apply": _apply,
    "in_span": _in_span,
    "pair_cmp": _pair_cmp,
    "tree_of_height_one": _tree,
    "complement_triangles": _complement_triangles,
    "rt_decompose": _rt,
    "extremal_graph": _extremal,
    "script_w": _script_w,
    "example2_dependency": _example2_dependency,
    "bound": _bound,
    "thm38": _thm38,
    "lb_special": _lb38,
    "invariants": _invariants,
    "schur_exact": _schur,
    "h2_exact": _h2,
    "dim_psi": _dim_psi,
    "coprime_product": _coprime,
    "capable_construction": _capable_thm43,
    "presentation": _presentation,
    "attains_thm33": _attains_thm33,
    "product_attains": _product_attains,
    "radical_dim": _radical_dim,
    "script_w_contains": _w_contains,
}


@dataclass(frozen=True)
class FixtureResult:
    id: str
    status: str
    expected: object
    observed: object
    note: str = ""

    def as_dict(self) -> dict:
        return {"id": self.id, "status": self.status, "expected": self.expected, "observed": self.observed, "note": self.note}


def default_store_path():
    return resources.files("schurbound") / "data" / "paper_fixtures.json"


def load_store(path=None) -> list[dict]:
    src = default_store_path() if path is None else Path(path)
    try:
        doc = json.loads(src.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"fixture store is not valid JSON: {exc}") from exc
    if not isinstance(doc, list):
        raise MalformedDocument("fixture store must be a JSON list")
    seen = set()
    for rec in doc:
        if not isinstance(rec, dict):
            raise MalformedDocument("fixture records must be objects")
        for key in ("id", "check", "args", "expected"):
            if key not in rec:
                raise MalformedDocument(f"fixture record missing field {key!r}: {rec}")
        if rec["check"] not in CHECKS:
            raise MalformedDocument(f"fixture {rec['id']!r}: unknown check {rec['check']!r}")
        if rec["id"] in seen:
            raise MalformedDocument(f"duplicate fixture id {rec['id']!r}")
        seen.add(rec["id"])
    return doc


def run_fixture(rec: dict) -> FixtureResult:
    try:
        observed = CHECKS[rec["check"]](rec["args"])
    except (KeyError, TypeError) as exc:
        raise MalformedDocument(f"fixture {rec['id']!r}: bad arguments ({exc})") from exc
    except SchurBoundError as exc:
        observed = {"error": type(exc).__name__}
    # normalize tuples etc. so comparisons match what a JSON store can hold
    observed = json.loads(json.dumps(observed))
    if "mismatch" in rec:
        status = "documented-mismatch" if observed == rec["mismatch"] else "fail"
        if observed == rec["expected"]:
            status = "pass"
    else:
        status = "pass" if observed == rec["expected"] else "fail"
    return FixtureResult(rec["id"], status, rec["expected"], observed, rec.get("note", ""))


def verify_all(path=None) -> list[FixtureResult]:
    return [run_fixture(rec) for rec in load_store(path)]

