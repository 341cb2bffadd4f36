"""Full analysis of one alternating map, as a JSON-serializable report."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Sequence

from . import bounds
from .altmap import AltMap, quotient_by_radical, radical
from .errors import InvalidParams
from .greedy import construct_pair_basis, is_tree_of_height_one
from .grouplab import ClassTwoGroup, capability_ellis, h2_exponent, schur_exponent_exact
from .psirank import dim_im_psi, lb_estimate, lb_nontree, script_w
from .trigraph import complement, count_triangles, graph_of_pairset

SCHEMA_VERSION = 1


@dataclass
class BoundReport:
    input: dict
    invariants: dict
    pair_basis: dict
    graph: dict
    ranks: dict
    script_w_size: int
    lower_bounds: dict
    bounds: list
    exact: dict | None
    capability: str | None
    chain_ok: bool
    timing_seconds: float = field(default=0.0)
    schema_version: int = SCHEMA_VERSION

    def as_dict(self) -> dict:
        return asdict(self)


def analyze_map(A: AltMap, order: Sequence[int] | None = None, source: str | None = None) -> BoundReport:
    start = time.perf_counter()
    pb = construct_pair_basis(A, order)
    n, m, p = A.n, A.m, A.p
    delta = n - len(radical(A))
    Q, _ = quotient_by_radical(A)

    G = graph_of_pairset(pb.pairs, n)
    tree, apex = is_tree_of_height_one(pb.pairs)
    comp_tri = count_triangles(complement(G))
    w_size = len(script_w(pb.pairs, n, pb.order))

    psi_u = dim_im_psi(A)
    psi_bar = dim_im_psi(Q)

    lower = {"estimate": lb_estimate(n, m)}
    if not tree and m >= 2:
        lower["nontree"] = lb_nontree(n, m)

    inv = {"p": p, "n": n + m, "d": n, "delta": delta, "k": m, "kprime": m}
    entries: list = []
    chain = None
    try:
        params = bounds.PGroupParams(**inv)
    except InvalidParams:
        params = None
    if params is not None:
        rep = bounds.compare_report(params)
        chain = bounds.exp_ew_chain(params, psi_bar)
        entries = [e.as_dict() for e in rep["bounds"]]
        entries.append(bounds.BoundEntry("ew_chain", chain).as_dict())

    exact = None
    capability = None
    chain_ok = True
    if p != 2:
        grp = ClassTwoGroup(A)
        exact = {"schur": schur_exponent_exact(grp), "h2": h2_exponent(grp)}
        capability = capability_ellis(grp).status
        if params is not None:
            thm33 = bounds.exp_thm33(params).effective
            chain_ok = exact["schur"] <= chain.effective <= thm33
    # W(B) is independent inside im Psi; the greedy pairs live on U, not U/rad
    chain_ok = chain_ok and w_size <= psi_u
    chain_ok = chain_ok and lower["estimate"] <= w_size and w_size == comb(n, 3) - comp_tri
    if not chain_ok:
        raise AssertionError("report inequality chain is inconsistent")

    return BoundReport(
        input={"source": source, "p": p, "dimU": n, "dimV": m, "order": list(pb.order)},
        invariants=inv,
        pair_basis={"pairs": [list(x) for x in pb.pairs], "vectors": [list(v) for v in pb.vectors]},
        graph={
            "edges": len(pb.pairs),
            "tree_of_height_one": tree,
            "apex": apex,
            "complement_triangles": comp_tri,
        },
        ranks={"dim_psi_U": psi_u, "dim_psi_bar": psi_bar},
        script_w_size=w_size,
        lower_bounds=lower,
        bounds=entries,
        exact=exact,
        capability=capability,
        chain_ok=chain_ok,
        timing_seconds=time.perf_counter() - start,
    )


def format_report(r: BoundReport) -> str:
    inv = r.invariants
    lines = [
        f"map: p={r.input['p']} dimU={r.input['dimU']} dimV={r.input['dimV']} order={','.join(map(str, r.input['order']))}",
        f"invariants: n={inv['n']} d={inv['d']} delta={inv['delta']} k={inv['k']} k'={inv['kprime']}",
        "pair basis: " + " ".join("{%d,%d}" % tuple(pr) for pr in r.pair_basis["pairs"]),
        f"graph: edges={r.graph['edges']} tree_of_height_one={r.graph['tree_of_height_one']}"
        f" complement_triangles={r.graph['complement_triangles']}",
        f"dim Psi on U = {r.ranks['dim_psi_U']}, on U/rad = {r.ranks['dim_psi_bar']}",
        f"|W(B)| = {r.script_w_size}; lower bounds: "
        + ", ".join(f"{k}={v}" for k, v in r.lower_bounds.items()),
    ]
    for e in r.bounds:
        lines.append(f"bound {e['name']:<12} exponent {e['exact']:>8}  (effective {e['effective']})")
    if r.exact is not None:
        lines.append(f"exact: |M(G)| = p^{r.exact['schur']}, |H^2(G,Z/p)| = p^{r.exact['h2']}")
        lines.append(f"capability: {r.capability}")
    lines.append(f"time: {r.timing_seconds:.3f}s")
    return "\n".join(lines)
