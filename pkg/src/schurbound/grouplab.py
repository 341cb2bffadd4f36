"""Class-2 groups of odd prime exponent, encoded by their commutator map.

A group ``G`` with generators ``g_1..g_d`` and central generators ``q_1..q_k``
corresponds to the alternating map ``A(e_i, e_j) = [g_i, g_j]`` written in the
``q`` basis. For such groups the sequence

    1 -> im Psi -> G^ab (x) gamma_2 G -> M(G) -> M(G^ab) -> gamma_2 G -> 1

is exact, which gives ``log_p |M(G)| = d*k + C(d,2) - dim im Psi - k`` with
Psi built on the full ``d``-dimensional ``G^ab``.

Presentation text
-----------------
``to_presentation`` emits, and ``parse_presentation`` reads::

    < g1, g2, g3, q1 |
      g_i^3 = q_j^3 = [q_j,q_k] = 1,
      [g1,g2] = [g1,g3] = q1,
      [g_i,g_j] = 1 otherwise >

Generator names are a letter prefix followed by a 1-based index; the first
relation fixes the prime and which prefix names the central generators.
Right-hand sides are products such as ``q1^2*q3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

from . import fieldmat as fm
from .altmap import AltMap, complement_indices, radical, validate
from .bounds import PGroupParams
from .errors import DuplicatePrime, InfeasibleParameters, MalformedDocument, NonPrimeModulus
from .fieldmat import FpMatrix
from .psirank import dim_im_psi
from .trigraph import rt_decompose


@dataclass(frozen=True)
class ClassTwoGroup:
    map: AltMap
    gen_prefix: str = "g"
    central_prefix: str = "q"

    def __post_init__(self):
        if self.map.p == 2:
            raise NonPrimeModulus("exponent-p class-2 groups need an odd prime")
        validate(self.map)
        for pre in (self.gen_prefix, self.central_prefix):
            if not re.fullmatch(r"[A-Za-z]+", pre):
                raise ValueError(f"generator prefix {pre!r} must be letters only")
        if self.gen_prefix == self.central_prefix:
            raise ValueError("generator and central prefixes must differ")

    @property
    def p(self) -> int:
        return self.map.p

    def generators(self) -> list[str]:
        return [f"{self.gen_prefix}{i}" for i in range(1, self.map.n + 1)]

    def central_generators(self) -> list[str]:
        return [f"{self.central_prefix}{i}" for i in range(1, self.map.m + 1)]


@dataclass(frozen=True)
class GroupInvariants:
    p: int
    n: int
    d: int
    delta: int
    k: int
    kprime: int

    def params(self) -> PGroupParams:
        return PGroupParams(self.p, self.n, self.d, self.delta, self.k, self.kprime)

    def as_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "d": self.d, "delta": self.delta, "k": self.k, "kprime": self.kprime}


def invariants(G: ClassTwoGroup) -> GroupInvariants:
    A = G.map
    delta = A.n - len(radical(A))
    return GroupInvariants(A.p, A.n + A.m, A.n, delta, A.m, A.m)


def schur_exponent_exact(G: ClassTwoGroup) -> int:
    A = G.map
    d, k = A.n, A.m
    return d * k + comb(d, 2) - dim_im_psi(A) - k


def h2_exponent(G: ClassTwoGroup) -> int:
    """``log_p |H^2(G, Z/p)|``, taking ``M(G)`` to be elementary abelian."""
    return G.map.n + schur_exponent_exact(G)


def killed_pairs(delta: int, k: int) -> list[tuple[int, int]]:
    """Pairs whose commutators are made trivial by the sharpness construction."""
    rt = rt_decompose(comb(delta, 2) - k)
    r, t = rt.r, rt.t
    apex = delta - r
    killed = [(apex, j) for j in range(delta - t + 1, delta + 1)]
    killed += list(combinations(range(delta - r + 1, delta + 1), 2))
    return killed


def construct_thm43(p: int, d: int, delta: int, k: int) -> ClassTwoGroup:
    """Capable group with the given ``d``, ``delta`` and ``k = k'`` whose multiplier
    meets the general upper bound.

    Pairs of ``1..delta`` not killed are sent, in pair order, to distinct
    basis vectors of ``V = F_p^k``; the last ``d - delta`` generators are
    central (a direct factor ``(Z/p)^(d-delta)``).
    """
    if p == 2 or not fm.is_prime(p):
        raise InfeasibleParameters(f"p={p} must be an odd prime")
    if not (2 <= delta <= d):
        raise InfeasibleParameters(f"need 2 <= delta <= d; got delta={delta}, d={d}")
    if not (delta - 1 <= k <= comb(delta, 2)):
        raise InfeasibleParameters(f"need delta - 1 <= k <= C(delta,2); got delta={delta}, k={k}")
    killed = set(killed_pairs(delta, k))
    kept = [pr for pr in sorted(combinations(range(1, delta + 1), 2), key=lambda e: (e[1], e[0])) if pr not in killed]
    if len(kept) != k:
        raise AssertionError(f"construction kept {len(kept)} pairs, expected {k}")
    table = {pr: [int(t == idx) for t in range(k)] for idx, pr in enumerate(kept)}
    return ClassTwoGroup(AltMap(p, d, k, table))


def multiplier_of_coprime_product(groups: Sequence[ClassTwoGroup]) -> list[tuple[int, int]]:
    """``(p, log_p |M|)`` per factor; cross tensor terms vanish for coprime orders."""
    primes = [G.p for G in groups]
    if len(set(primes)) != len(primes):
        raise DuplicatePrime(f"primes must be distinct, got {primes}")
    return [(G.p, schur_exponent_exact(G)) for G in groups]


@dataclass(frozen=True)
class CapabilityResult:
    capable: bool
    basis: tuple[int, ...] = field(default=())

    @property
    def status(self) -> str:
        return "Capable" if self.capable else "Unknown"


def _distinct_basis(A: AltMap, gens: Sequence[int]) -> bool:
    values = [A.value(a, b) for a, b in combinations(gens, 2)]
    values = [v for v in values if any(v)]
    if len(values) != A.m or len(set(values)) != len(values):
        return False
    return A.m == 0 or fm.rank(FpMatrix.from_rows(values, A.p)) == A.m


def capability_ellis(G: ClassTwoGroup) -> CapabilityResult:
    """Sufficient capability test on generators lifting a basis of ``G/Z``.

    The lifts are the leftmost standard generators independent modulo the
    radical. Failure only means the test is inconclusive.
    """
    A = G.map
    keep = complement_indices(radical(A), A.n, A.p)
    if _distinct_basis(A, keep):
        return CapabilityResult(True, tuple(keep))
    return CapabilityResult(False, tuple(keep))


# -- presentation text -------------------------------------------------------


def _format_value(vec, names) -> str:
    terms = []
    for c, name in zip(vec, names):
        if c == 1:
            terms.append(name)
        elif c:
            terms.append(f"{name}^{c}")
    return "*".join(terms)


def to_presentation(G: ClassTwoGroup) -> str:
    A = G.map
    gens = G.generators()
    cent = G.central_generators()
    gp, cp, p = G.gen_prefix, G.central_prefix, A.p
    if A.m:
        power = f"{gp}_i^{p} = {cp}_j^{p} = [{cp}_j,{cp}_k] = 1"
    else:
        power = f"{gp}_i^{p} = 1"
    groups: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for pr, v in A.table.items():
        groups.setdefault(v, []).append(pr)
    rels = [power]
    for v, prs in sorted(groups.items(), key=lambda kv: min((b, a) for a, b in kv[1])):
        lhs = " = ".join(f"[{gp}{a},{gp}{b}]" for a, b in sorted(prs, key=lambda e: (e[1], e[0])))
        rels.append(f"{lhs} = {_format_value(v, cent)}")
    rels.append(f"[{gp}_i,{gp}_j] = 1 otherwise")
    head = ", ".join(gens + cent)
    body = ",\n  ".join(rels)
    return f"< {head} |\n  {body} >\n"


_NAME = re.compile(r"([A-Za-z]+)(\d+)$")


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [s.strip() for s in parts if s.strip()]


def parse_presentation(text: str) -> ClassTwoGroup:
    s = " ".join(text.split())
    if not (s.startswith("<") and s.endswith(">")) or "|" not in s:
        raise MalformedDocument("presentation must look like '< generators | relations >'")
    head, body = s[1:-1].split("|", 1)
    names = [x.strip() for x in head.split(",") if x.strip()]
    rels = _split_top(body)
    if not rels:
        raise MalformedDocument("missing power relation")
    m = re.fullmatch(r"([A-Za-z]+)_i\^(\d+)(?: = ([A-Za-z]+)_j\^(\d+) = \[\3_j,\3_k\])? = 1", rels[0])
    if not m:
        raise MalformedDocument(f"cannot read power relation {rels[0]!r}")
    gp, p = m.group(1), int(m.group(2))
    cp = m.group(3) or ("q" if gp != "q" else "z")
    gens, cent = [], []
    for nm in names:
        mm = _NAME.match(nm)
        if not mm or mm.group(1) not in (gp, cp):
            raise MalformedDocument(f"unexpected generator name {nm!r}")
        (gens if mm.group(1) == gp else cent).append(int(mm.group(2)))
    if gens != list(range(1, len(gens) + 1)) or cent != list(range(1, len(cent) + 1)):
        raise MalformedDocument("generators must be numbered consecutively from 1")
    n, k = len(gens), len(cent)
    table = {}
    comm = re.compile(rf"\[{gp}(\d+),{gp}(\d+)\]$")
    for rel in rels[1:]:
        if rel.endswith("otherwise"):
            continue
        sides = [x.strip() for x in rel.split("=")]
        vec = [0] * k
        for term in sides[-1].split("*"):
            tm = re.fullmatch(rf"{cp}(\d+)(?:\^(-?\d+))?", term.strip())
            if not tm or not (1 <= int(tm.group(1)) <= k):
                raise MalformedDocument(f"cannot read commutator value {sides[-1]!r}")
            vec[int(tm.group(1)) - 1] += int(tm.group(2) or 1)
        for lhs in sides[:-1]:
            cm = comm.match(lhs)
            if not cm:
                raise MalformedDocument(f"cannot read commutator {lhs!r}")
            a, b = int(cm.group(1)), int(cm.group(2))
            if a == b or not (1 <= a <= n and 1 <= b <= n):
                raise MalformedDocument(f"bad commutator {lhs!r}")
            v = vec if a < b else [-x for x in vec]
            key = (min(a, b), max(a, b))
            if key in table:
                raise MalformedDocument(f"commutator {lhs!r} given twice")
            table[key] = v
    return ClassTwoGroup(AltMap(p, n, k, table), gen_prefix=gp, central_prefix=cp)
