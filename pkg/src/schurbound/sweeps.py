"""Parameter sweeps with order-independent aggregation.

Grid syntax: ``KIND[:KEY=VALUES[;KEY=VALUES...]]`` where ``VALUES`` is a
comma-separated list of integers and ``lo..hi`` ranges (inclusive), e.g.
``sharpness:p=3,5;delta=2..6;a=0..2``. Omitted keys take the defaults in
``KINDS``. An empty range yields an empty grid.

Kinds:

- ``ordering``  -- ``thm33 <= rai_ineq4 <= rai_thm14`` over every valid tuple
  with the given ``d``; ``k = k' + kextra`` and ``n = d + k``.
- ``lemma37``   -- the triangle identity for every ``1 <= k' < delta - 1``.
- ``sharpness`` -- exact multiplier of the construction equals the general
  bound, for every ``delta - 1 <= k <= C(delta,2)`` and ``d = delta + a``.
- ``soundness`` -- exact multiplier of random class-2 groups never exceeds
  any applicable bound.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import comb

from . import bounds
from .altmap import quotient_by_radical, random_altmap
from .errors import InvalidParams
from .grouplab import (
    ClassTwoGroup,
    capability_ellis,
    construct_thm43,
    h2_exponent,
    invariants,
    schur_exponent_exact,
)
from .psirank import dim_im_psi

KINDS: dict[str, dict[str, list[int]]] = {
    "ordering": {"p": [3], "d": list(range(2, 13)), "kextra": [0, 1, 2]},
    "lemma37": {"delta": list(range(3, 41))},
    "sharpness": {"p": [3, 5], "delta": list(range(2, 7)), "a": [0, 1, 2]},
    "soundness": {"p": [3, 5], "n": list(range(2, 7)), "m": list(range(1, 7)), "seed": list(range(5))},
}


@dataclass(frozen=True)
class Grid:
    kind: str
    axes: dict[str, tuple[int, ...]]


def _parse_values(text: str) -> tuple[int, ...]:
    vals: list[int] = []
    for part in text.split(","):
        part = part.strip()
        m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", part)
        if m:
            vals.extend(range(int(m.group(1)), int(m.group(2)) + 1))
        elif re.fullmatch(r"-?\d+", part):
            vals.append(int(part))
        else:
            raise InvalidParams(f"cannot read grid values {part!r}")
    return tuple(sorted(set(vals)))


def parse_grid(spec: str) -> Grid:
    kind, _, rest = spec.strip().partition(":")
    kind = kind.strip()
    if kind not in KINDS:
        raise InvalidParams(f"unknown sweep kind {kind!r}; expected one of {sorted(KINDS)}")
    axes = {k: tuple(v) for k, v in KINDS[kind].items()}
    for item in filter(None, (s.strip() for s in rest.split(";"))):
        key, eq, vals = item.partition("=")
        key = key.strip()
        if not eq:
            raise InvalidParams(f"grid item {item!r} must look like key=values")
        if key not in axes:
            raise InvalidParams(f"unknown key {key!r} for sweep {kind!r}; expected one of {sorted(axes)}")
        axes[key] = _parse_values(vals)
    return Grid(kind, axes)


def cases(grid: Grid) -> list[tuple]:
    ax = grid.axes
    out: list[tuple] = []
    if grid.kind == "ordering":
        for p, d, extra in product(ax["p"], ax["d"], ax["kextra"]):
            for delta in range(2, d + 1):
                for kp in range(1, comb(delta, 2) + 1):
                    k = kp + extra
                    out.append((p, d + k, d, delta, k, kp))
    elif grid.kind == "lemma37":
        for delta in ax["delta"]:
            out.extend((delta, kp) for kp in range(1, delta - 1))
    elif grid.kind == "sharpness":
        for p, delta, a in product(ax["p"], ax["delta"], ax["a"]):
            out.extend((p, delta + a, delta, k) for k in range(delta - 1, comb(delta, 2) + 1))
    elif grid.kind == "soundness":
        for p, n, m, seed in product(ax["p"], ax["n"], ax["m"], ax["seed"]):
            if 1 <= m <= comb(n, 2):
                out.append((p, n, m, seed))
    return out


# -- per-case workers (top level so they pickle) -----------------------------


def _ordering_case(t):
    P = bounds.PGroupParams(*t)
    a, b, c = bounds.exp_thm33(P), bounds.exp_rai_ineq4(P), bounds.exp_rai_thm14(P)
    ok = a <= b <= c
    if P.d == P.delta and P.delta >= P.kprime + 1:
        # the two bounds coincide in this regime
        ok = ok and a == c
    detail = {"thm33": str(a), "rai_ineq4": str(b), "rai_thm14": str(c)}
    if bounds.is_special_shape(P) and P.d > P.k + 1 and P.k > 2:
        s = bounds.exp_thm38(P.p, P.n, P.d, P.k)
        ok = ok and s <= a
        detail["thm38"] = str(s)
    return ok, detail


def _lemma37_case(t):
    return bounds.lemma37_check(*t), {}


def _sharpness_case(t):
    p, d, delta, k = t
    G = construct_thm43(p, d, delta, k)
    inv = invariants(G)
    exact = schur_exponent_exact(G)
    bound = bounds.exp_thm33(inv.params()).effective
    ok = exact == bound and inv.delta == delta and capability_ellis(G).capable
    return ok, {"exact": exact, "thm33": bound}


def soundness_checks(G: ClassTwoGroup) -> dict[str, tuple[int, int]]:
    """``name -> (exact, bound)`` for every bound applicable to ``G``."""
    inv = invariants(G)
    P = inv.params()
    exact = schur_exponent_exact(G)
    Q, _ = quotient_by_radical(G.map)
    psi_bar = dim_im_psi(Q)
    out = {
        "thm33": (exact, bounds.exp_thm33(P).effective),
        "rai_ineq4": (exact, bounds.exp_rai_ineq4(P).effective),
        "rai_thm14": (exact, bounds.exp_rai_thm14(P).effective),
        "ew_chain": (exact, bounds.exp_ew_chain(P, psi_bar).effective),
        "cor34_h2": (h2_exponent(G), bounds.exp_cor34(P).effective),
        "psi_ranks": (inv.k * (inv.d - inv.delta) + psi_bar, dim_im_psi(G.map)),
    }
    if bounds.is_special_shape(P) and P.d > P.k + 1 and P.k > 2:
        out["thm38"] = (exact, bounds.exp_thm38(P.p, P.n, P.d, P.k).effective)
        out["cor39_h2"] = (h2_exponent(G), bounds.exp_cor39(P.p, P.n, P.d, P.k).effective)
    if bounds.is_special_shape(P) and P.k == comb(P.d, 2) and P.d >= 3:
        out["rai_special"] = (exact, bounds.exp_rai_special(P.d).effective)
    return out


def _soundness_case(t):
    p, n, m, seed = t
    # sparse maps are more likely to have a radical, so delta < d gets exercised
    density = (0.3, 0.6, 1.0)[seed % 3]
    G = ClassTwoGroup(random_altmap(p, n, m, seed=seed * 1009 + n * 31 + m, density=density))
    checks = soundness_checks(G)
    bad = sorted(name for name, (lo, hi) in checks.items() if lo > hi)
    return not bad, {"violated": bad}


WORKERS = {
    "ordering": _ordering_case,
    "lemma37": _lemma37_case,
    "sharpness": _sharpness_case,
    "soundness": _soundness_case,
}


def _run_one(job):
    kind, t = job
    ok, detail = WORKERS[kind](t)
    return list(t), ok, detail


@dataclass
class SweepResult:
    kind: str
    axes: dict
    cases: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)

    @property
    def violations(self) -> int:
        return self.cases - self.passed

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "axes": {k: list(v) for k, v in self.axes.items()},
            "cases": self.cases,
            "passed": self.passed,
            "violations": self.violations,
            "failures": self.failures,
        }


def run_sweep(grid: Grid | str, parallel: int = 1) -> SweepResult:
    if isinstance(grid, str):
        grid = parse_grid(grid)
    if parallel < 1:
        raise InvalidParams(f"--parallel must be >= 1; got {parallel}")
    jobs = [(grid.kind, t) for t in cases(grid)]
    if parallel > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as ex:
            rows = list(ex.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * parallel))))
    else:
        rows = [_run_one(j) for j in jobs]
    res = SweepResult(grid.kind, grid.axes)
    for case, ok, detail in sorted(rows, key=lambda r: r[0]):
        res.cases += 1
        if ok:
            res.passed += 1
        else:
            res.failures.append({"case": case, **detail})
    return res
