"""Greedy extraction of a pair basis from an alternating map.

Given an ordering of the basis of U, index pairs are scanned from least to
greatest (compare maxima first, then the remaining element) and a pair is kept
whenever its value leaves the span of the values kept so far. The kept pairs
and their values form a ``PairBasis``.

``order`` arguments are sequences listing the 1-based generator labels from
least to greatest; ``None`` means the natural order ``1 < 2 < ... < n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from . import fieldmat as fm
from .altmap import AltMap, BasisChange, change_basis, validate
from .errors import HypothesisViolated, ImageDoesNotSpan, InvalidParams
from .fieldmat import FpMatrix

Pair = tuple[int, int]
Triple = tuple[int, int, int]


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _rank_of(order: Sequence[int] | None) -> dict[int, int] | None:
    if order is None:
        return None
    return {g: pos for pos, g in enumerate(order)}


def _key(rank: dict[int, int] | None, i: int) -> int:
    return i if rank is None else rank[i]


def _cmp_sorted(a: list[int], b: list[int]) -> Cmp:
    """Lexicographic comparison from the largest element down."""
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return Cmp.LESS if x < y else Cmp.GREATER
    return Cmp.EQUAL


def pair_cmp(a: Sequence[int], b: Sequence[int], order: Sequence[int] | None = None) -> Cmp:
    rank = _rank_of(order)
    ka = sorted(_key(rank, i) for i in a)
    kb = sorted(_key(rank, i) for i in b)
    return _cmp_sorted(ka, kb)


def triple_cmp(a: Sequence[int], b: Sequence[int], order: Sequence[int] | None = None) -> Cmp:
    """Maximum first; on a tie, compare the remaining pairs."""
    rank = _rank_of(order)
    ka = sorted(_key(rank, i) for i in a)
    kb = sorted(_key(rank, i) for i in b)
    return _cmp_sorted(ka, kb)


def pair_sort_key(order: Sequence[int] | None = None):
    rank = _rank_of(order)

    def key(pr):
        return tuple(sorted((_key(rank, i) for i in pr), reverse=True))

    return key


def ordered_pairs(n: int, order: Sequence[int] | None = None) -> list[Pair]:
    """All pairs ``(i, j)``, ``i < j``, listed in increasing pair order."""
    return sorted(combinations(range(1, n + 1), 2), key=pair_sort_key(order))


def ordered_triples(n: int, order: Sequence[int] | None = None) -> list[Triple]:
    return sorted(combinations(range(1, n + 1), 3), key=pair_sort_key(order))


@dataclass(frozen=True)
class TraceStep:
    pair: Pair
    accepted: bool
    rank_before: int


@dataclass(frozen=True)
class PairBasis:
    order: tuple[int, ...]
    pairs: tuple[Pair, ...]
    vectors: tuple[tuple[int, ...], ...]
    trace: tuple[TraceStep, ...] = field(default=(), compare=False, repr=False)

    def prefixes(self) -> list[tuple[Pair, ...]]:
        """The intermediate sets ``pairs[:1], pairs[:2], ...`` of the construction."""
        return [self.pairs[:k] for k in range(1, len(self.pairs) + 1)]


def _check_order(order, n) -> tuple[int, ...]:
    if order is None:
        return tuple(range(1, n + 1))
    order = tuple(int(g) for g in order)
    if sorted(order) != list(range(1, n + 1)):
        raise InvalidParams(f"order must be a permutation of 1..{n}, got {order}")
    return order


def construct_pair_basis(A: AltMap, order: Sequence[int] | None = None) -> PairBasis:
    validate(A)
    if A.m < 1:
        raise ImageDoesNotSpan("pair basis needs dim V >= 1")
    order = _check_order(order, A.n)
    p = A.p
    # incremental echelon basis: rows kept reduced, pivot -> row
    echelon: list[np.ndarray] = []
    pivots: list[int] = []
    pairs: list[Pair] = []
    vectors: list[tuple[int, ...]] = []
    trace: list[TraceStep] = []
    for pr in ordered_pairs(A.n, order):
        v = np.array(A.value(*pr), dtype=np.int64)
        if not v.any():
            trace.append(TraceStep(pr, False, len(pairs)))
            continue
        w = v.copy()
        for row, c in zip(echelon, pivots):
            if w[c]:
                w = (w - w[c] * row) % p
        accepted = bool(w.any())
        trace.append(TraceStep(pr, accepted, len(pairs)))
        if accepted:
            c = int(np.flatnonzero(w)[0])
            w = (w * pow(int(w[c]), -1, p)) % p
            echelon.append(w)
            pivots.append(c)
            pairs.append(pr)
            vectors.append(tuple(int(x) for x in v))
            if len(pairs) == A.m:
                break
    return PairBasis(order, tuple(pairs), tuple(vectors), tuple(trace))


def is_tree_of_height_one(pairs: Sequence[Sequence[int]]) -> tuple[bool, int | None]:
    """Whether one vertex lies in every pair (a star); returns that apex."""
    pairs = [tuple(sorted(pr)) for pr in pairs]
    if not pairs:
        return False, None
    common = set(pairs[0])
    for pr in pairs[1:]:
        common &= set(pr)
    if not common:
        return False, None
    return True, min(common)


# -- normalization -----------------------------------------------------------


class Classification(enum.Enum):
    NON_TREE = "NonTree"
    NORMALIZED = "Normalized"


@dataclass(frozen=True)
class NormalizationOutcome:
    """Result of the normalization.

    ``basis_change`` maps the input map to ``transformed``; the pair basis is
    always taken in the natural order of the transformed map, so the
    relabelling is folded into the basis change.
    """

    classification: Classification
    basis_change: BasisChange
    transformed: AltMap
    pair_basis: PairBasis
    step: int
    witnesses: dict = field(default_factory=dict, compare=False)

    @property
    def order(self) -> tuple[int, ...]:
        return self.pair_basis.order


def _independent(vectors, p) -> bool:
    return fm.rank(FpMatrix.from_rows(vectors, p)) == len(vectors)


def check_normal_form(A: AltMap, pairs: Sequence[Pair]) -> dict:
    """Evaluate properties (p1)-(p4) literally; returns a dict of booleans."""
    n, m, p = A.n, A.m, A.p
    zero = (0,) * m
    p1 = list(pairs) == [(1, i) for i in range(2, m + 2)]
    p2 = all(A.value(1, i) == zero for i in range(m + 2, n + 1))
    p3 = all(A.value(i, j) == zero for i in range(m + 2, n + 1) for j in range(i + 1, n + 1))
    p4 = all(
        fm.in_span(A.value(i, j), [A.value(1, i)], p)
        for i in range(2, m + 2)
        for j in range(m + 2, n + 1)
    )
    return {"p1": p1, "p2": p2, "p3": p3, "p4": p4}


def normalize_prop24(A: AltMap) -> NormalizationOutcome:
    """Rebase U until the pair basis is either not a star or in normal form.

    Four passes, each followed by a fresh greedy run:

    1. move the star's apex to position 1 and its leaves to ``2..m+1``;
    2. replace ``u_{m+2}..u_n`` by a complement of ``u_1`` inside the kernel of
       ``u -> A(u_1, u)``;
    3. if some ``A(u_r, u_s) != 0`` with ``m+1 < r < s``, reorder to expose two
       disjoint pairs;
    4. if some ``A(u_r, u_s)`` with ``r <= m+1 < s`` leaves ``span A(u_1, u_r)``,
       reorder to expose a path of length two.
    """
    validate(A)
    n, m, p = A.n, A.m, A.p
    if m <= 2 or n <= m + 1:
        raise HypothesisViolated(f"normalization needs m > 2 and n > m + 1; got n={n}, m={m}")

    identity = BasisChange.permutation(range(1, n + 1), p)

    def finish(cls, P, step, **wit):
        B = change_basis(A, P)
        pb = construct_pair_basis(B)
        tree, apex = is_tree_of_height_one(pb.pairs)
        if cls is Classification.NON_TREE:
            if tree:
                raise AssertionError("reordering was expected to break the star")
            wit = {**wit, "tree": False}
        else:
            props = check_normal_form(B, pb.pairs)
            if not all(props.values()):
                raise AssertionError(f"normal form check failed: {props}")
            wit = {**wit, **props}
        return NormalizationOutcome(cls, P, B, pb, step, wit)

    # step 1
    pb = construct_pair_basis(A)
    tree, apex = is_tree_of_height_one(pb.pairs)
    if not tree:
        return finish(Classification.NON_TREE, identity, 1)
    leaves = [a if b == apex else b for a, b in pb.pairs]
    rest = [g for g in range(1, n + 1) if g != apex and g not in leaves]
    P = BasisChange.permutation([apex, *leaves, *rest], p)
    A1 = change_basis(A, P)
    pb1 = construct_pair_basis(A1)
    if not is_tree_of_height_one(pb1.pairs)[0]:
        return finish(Classification.NON_TREE, P, 1)

    # step 2: kernel of L(u) = A(u_1, u)
    T = A1.tensor()
    L = FpMatrix(p, T[0].T.copy())  # m x n, column j = A(u_1, u_j)
    ker = fm.kernel_basis(L)
    chosen: list[list[int]] = []
    current = [[int(k == 0) for k in range(n)]]
    for v in ker:
        if _independent(current + [v], p):
            current.append(v)
            chosen.append(v)
    cols = [[int(k == i) for k in range(n)] for i in range(m + 1)] + chosen
    P2 = BasisChange.from_columns(cols, p)
    P = P.compose(P2)
    A2 = change_basis(A, P)
    pb2 = construct_pair_basis(A2)
    if not is_tree_of_height_one(pb2.pairs)[0]:
        return finish(Classification.NON_TREE, P, 2)

    def reorder(r, s, j):
        first = [1, r, s, j]
        return BasisChange.permutation(first + [g for g in range(1, n + 1) if g not in first], p)

    # step 3
    for r in range(m + 2, n + 1):
        for s in range(r + 1, n + 1):
            v = A2.value(r, s)
            if not any(v):
                continue
            for j in range(2, m + 2):
                if _independent([v, A2.value(1, j)], p):
                    return finish(Classification.NON_TREE, P.compose(reorder(r, s, j)), 3, violated=(r, s), partner=j)

    # step 4
    for r in range(2, m + 2):
        for s in range(m + 2, n + 1):
            v = A2.value(r, s)
            if fm.in_span(v, [A2.value(1, r)], p):
                continue
            for j in range(2, m + 2):
                if j != r and _independent([A2.value(1, r), v, A2.value(1, j)], p):
                    return finish(Classification.NON_TREE, P.compose(reorder(r, s, j)), 4, violated=(r, s), partner=j)

    return finish(Classification.NORMALIZED, P, 4)
