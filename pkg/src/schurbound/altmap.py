"""Alternating bilinear maps ``A: U x U -> V`` over F_p.

A map is stored by its values on basis pairs ``(i, j)`` with ``1 <= i < j <= n``
(1-based, as in every document and presentation this package reads or
writes). Absent pairs are zero; ``A(e_j, e_i) = -A(e_i, e_j)`` and
``A(e_i, e_i) = 0`` are synthesized.

Document format (UTF-8 JSON)::

    {"p": 3, "dimU": 5, "dimV": 4,
     "entries": [{"i": 1, "j": 2, "value": [1, 0, 0, 0]}, ...]}
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Mapping, Sequence

import numpy as np

from . import fieldmat as fm
from .errors import (
    BadVectorLength,
    ImageDoesNotSpan,
    IndexOutOfRange,
    InfeasibleDimensions,
    MalformedDocument,
    SingularMatrix,
)
from .fieldmat import FpMatrix

Pair = tuple[int, int]


@dataclass(frozen=True)
class AltMap:
    p: int
    n: int
    m: int
    table: Mapping[Pair, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        fm.check_prime(self.p)
        if self.n < 0 or self.m < 0:
            raise InfeasibleDimensions("dimensions must be non-negative")
        clean = {}
        for key, vec in self.table.items():
            i, j = key
            if not (1 <= i < j <= self.n):
                raise IndexOutOfRange(f"pair ({i}, {j}) must satisfy 1 <= i < j <= {self.n}")
            if len(vec) != self.m:
                raise BadVectorLength(f"value for ({i}, {j}) has length {len(vec)}, expected {self.m}")
            vec = tuple(int(x) % self.p for x in vec)
            if any(vec):
                clean[(int(i), int(j))] = vec
        object.__setattr__(self, "table", dict(sorted(clean.items())))

    def value(self, i: int, j: int) -> tuple[int, ...]:
        """``A(e_i, e_j)`` for 1-based indices in either order."""
        if i == j:
            return (0,) * self.m
        if i < j:
            return self.table.get((i, j), (0,) * self.m)
        v = self.table.get((j, i))
        if v is None:
            return (0,) * self.m
        return tuple((-x) % self.p for x in v)

    def tensor(self) -> np.ndarray:
        """Dense ``n x n x m`` array ``T[i, j] = A(e_{i+1}, e_{j+1})``."""
        T = np.zeros((self.n, self.n, self.m), dtype=np.int64)
        for (i, j), v in self.table.items():
            T[i - 1, j - 1] = v
            T[j - 1, i - 1] = [(-x) % self.p for x in v]
        return T

    def pair_matrix(self) -> FpMatrix:
        """``m x C(n,2)`` matrix whose columns are the values of all pairs ``i < j``."""
        cols = [self.value(i, j) for i, j in combinations(range(1, self.n + 1), 2)]
        if not cols:
            return FpMatrix.zeros(self.m, 0, self.p)
        return FpMatrix(self.p, np.array(cols, dtype=np.int64).reshape(len(cols), self.m).T)

    def __eq__(self, other):
        if not isinstance(other, AltMap):
            return NotImplemented
        return (self.p, self.n, self.m, self.table) == (other.p, other.n, other.m, other.table)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class BasisChange:
    """Invertible ``n x n`` matrix whose columns are the new basis vectors of U."""

    p: int
    n: int
    matrix: FpMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.n, self.n) or self.matrix.p != self.p:
            raise BadVectorLength("basis change must be an n x n matrix over F_p")
        if fm.rank(self.matrix) != self.n:
            raise SingularMatrix("basis change matrix is not invertible")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], p: int) -> BasisChange:
        n = len(columns)
        return cls(p, n, FpMatrix.from_rows(columns, p, cols=n).transpose())

    @classmethod
    def permutation(cls, order: Sequence[int], p: int) -> BasisChange:
        """New basis vector ``k`` is old ``e_{order[k]}`` (1-based labels)."""
        n = len(order)
        cols = []
        for src in order:
            v = [0] * n
            v[src - 1] = 1
            cols.append(v)
        return cls.from_columns(cols, p)

    def columns(self) -> list[list[int]]:
        return self.matrix.transpose().tolist()

    def inverse(self) -> BasisChange:
        inv = fm.inverse(self.matrix)
        return BasisChange(self.p, self.n, inv)

    def compose(self, then: BasisChange) -> BasisChange:
        """Apply ``self`` first, then ``then`` (expressed in the new coordinates)."""
        return BasisChange(self.p, self.n, self.matrix @ then.matrix)

    def __eq__(self, other):
        if not isinstance(other, BasisChange):
            return NotImplemented
        return self.p == other.p and self.matrix == other.matrix


# -- document format ---------------------------------------------------------


def _require_int(doc, key):
    if key not in doc:
        raise MalformedDocument(f"missing field '{key}'")
    val = doc[key]
    if not isinstance(val, int) or isinstance(val, bool):
        raise MalformedDocument(f"field '{key}' must be an integer")
    return val


def altmap_from_dict(doc) -> AltMap:
    if not isinstance(doc, dict):
        raise MalformedDocument("document must be a JSON object")
    p = _require_int(doc, "p")
    n = _require_int(doc, "dimU")
    m = _require_int(doc, "dimV")
    fm.check_prime(p)
    if n < 0 or m < 0:
        raise MalformedDocument("fields 'dimU' and 'dimV' must be non-negative")
    entries = doc.get("entries", [])
    if not isinstance(entries, list):
        raise MalformedDocument("field 'entries' must be a list")
    table = {}
    for k, e in enumerate(entries):
        if not isinstance(e, dict):
            raise MalformedDocument(f"entries[{k}] must be an object")
        i = _require_int(e, "i")
        j = _require_int(e, "j")
        val = e.get("value")
        if not isinstance(val, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in val):
            raise MalformedDocument(f"entries[{k}].value must be a list of integers")
        if not (1 <= i < j <= n):
            raise IndexOutOfRange(f"entries[{k}]: pair ({i}, {j}) must satisfy 1 <= i < j <= {n}")
        if len(val) != m:
            raise BadVectorLength(f"entries[{k}].value has length {len(val)}, expected {m}")
        if (i, j) in table:
            raise MalformedDocument(f"entries[{k}]: duplicate pair ({i}, {j})")
        table[(i, j)] = val
    return AltMap(p, n, m, table)


def altmap_to_dict(A: AltMap) -> dict:
    return {
        "p": A.p,
        "dimU": A.n,
        "dimV": A.m,
        "entries": [{"i": i, "j": j, "value": list(v)} for (i, j), v in A.table.items()],
    }


def parse_altmap(text: str) -> AltMap:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"invalid JSON: {exc}") from None
    return altmap_from_dict(doc)


def serialize_altmap(A: AltMap) -> str:
    """JSON text with one entry per line."""
    doc = altmap_to_dict(A)
    entries = ",\n  ".join(json.dumps(e) for e in doc["entries"])
    body = f"\n  {entries}\n " if entries else ""
    return f'{{"p": {A.p}, "dimU": {A.n}, "dimV": {A.m}, "entries": [{body}]}}\n'


def load_altmap(path) -> AltMap:
    with open(path, encoding="utf-8") as fh:
        return parse_altmap(fh.read())


# -- operations --------------------------------------------------------------


def validate(A: AltMap) -> None:
    """Raise ``ImageDoesNotSpan`` unless the pair values span V."""
    if A.m == 0:
        return
    r = fm.rank(A.pair_matrix())
    if r != A.m:
        raise ImageDoesNotSpan(f"pair values span a {r}-dimensional subspace of V (dim {A.m})")


def is_valid(A: AltMap) -> bool:
    try:
        validate(A)
    except ImageDoesNotSpan:
        return False
    return True


def apply(A: AltMap, x: Sequence[int], y: Sequence[int]) -> list[int]:
    """``A(x, y)`` by bilinear extension."""
    if len(x) != A.n or len(y) != A.n:
        raise BadVectorLength(f"vectors must have length {A.n}")
    p = A.p
    out = [0] * A.m
    for (i, j), v in A.table.items():
        c = (x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]) % p
        if c:
            for t in range(A.m):
                out[t] += c * v[t]
    return [o % p for o in out]


def stacked_matrix(A: AltMap) -> FpMatrix:
    """``(m*n) x n`` matrix of ``x -> (A(x, e_1), ..., A(x, e_n))``."""
    T = A.tensor()  # T[i, j, :] = A(e_i, e_j)
    # row (j, t), column i  ->  A(e_i, e_j)[t]
    rows = np.transpose(T, (1, 2, 0)).reshape(A.n * A.m, A.n)
    return FpMatrix(A.p, rows)


def radical(A: AltMap) -> list[list[int]]:
    """Basis of ``{x : A(x, y) = 0 for all y}``."""
    if A.m == 0:
        return [[int(i == j) for j in range(A.n)] for i in range(A.n)]
    return fm.kernel_basis(stacked_matrix(A))


def complement_indices(vectors: Sequence[Sequence[int]], n: int, p: int) -> list[int]:
    """Leftmost standard basis indices (1-based) completing ``vectors`` to a basis."""
    chosen: list[int] = []
    current = [list(v) for v in vectors]
    r = fm.rank(FpMatrix.from_rows(current, p, cols=n)) if current else 0
    for i in range(1, n + 1):
        e = [int(k == i - 1) for k in range(n)]
        cand = current + [e]
        r2 = fm.rank(FpMatrix.from_rows(cand, p))
        if r2 > r:
            current, r = cand, r2
            chosen.append(i)
    return chosen


def quotient_by_radical(A: AltMap) -> tuple[AltMap, FpMatrix]:
    """Map induced on ``U / rad A`` and the ``n' x n`` projection matrix.

    The quotient basis consists of the images of the leftmost standard basis
    vectors that are independent modulo the radical; they keep their relative
    order and are relabelled ``1..n'``.
    """
    rad = radical(A)
    keep = complement_indices(rad, A.n, A.p)
    nq = len(keep)
    table = {}
    for a in range(nq):
        for b in range(a + 1, nq):
            v = A.value(keep[a], keep[b])
            if any(v):
                table[(a + 1, b + 1)] = v
    Q = AltMap(A.p, nq, A.m, table)
    # coordinates w.r.t. [kept e_i ; radical basis]; first n' of them project
    basis_cols = [[int(k == i - 1) for k in range(A.n)] for i in keep] + [list(v) for v in rad]
    M = FpMatrix.from_rows(basis_cols, A.p).transpose()
    Minv = fm.inverse(M)
    proj = FpMatrix(A.p, Minv.data[:nq, :]) if nq else FpMatrix.zeros(0, A.n, A.p)
    return Q, proj


def change_basis(A: AltMap, P: BasisChange | FpMatrix) -> AltMap:
    """``A'(e_a, e_b) = A(P e_a, P e_b)``."""
    if isinstance(P, FpMatrix):
        P = BasisChange(A.p, A.n, P)
    if P.n != A.n or P.p != A.p:
        raise BadVectorLength("basis change does not match the map")
    T = A.tensor()
    Pm = P.matrix.data
    # T'[a, b, :] = sum_{i,j} P[i, a] P[j, b] T[i, j, :]
    tmp = fm.matmul_mod(Pm.T, T.reshape(A.n, A.n * A.m), A.p).reshape(A.n, A.n, A.m)
    tmp = np.transpose(tmp, (1, 0, 2)).reshape(A.n, A.n * A.m)
    Tn = fm.matmul_mod(Pm.T, tmp, A.p).reshape(A.n, A.n, A.m)
    Tn = np.transpose(Tn, (1, 0, 2))
    table = {
        (a + 1, b + 1): tuple(int(x) for x in Tn[a, b])
        for a in range(A.n)
        for b in range(a + 1, A.n)
        if Tn[a, b].any()
    }
    return AltMap(A.p, A.n, A.m, table)


def random_altmap(p: int, n: int, m: int, seed=None, density: float = 1.0) -> AltMap:
    """Random spanning map, deterministic per ``seed``.

    ``density`` is the probability that a pair carries a nonzero value before
    the spanning repair; small values give sparse, more structured maps.
    """
    fm.check_prime(p)
    if n < 0 or m < 0 or m > comb(n, 2):
        raise InfeasibleDimensions(f"need 0 <= m <= C(n,2); got n={n}, m={m}")
    rng = random.Random(seed)
    pairs = list(combinations(range(1, n + 1), 2))
    while True:
        table = {}
        for pr in pairs:
            if rng.random() < density:
                table[pr] = [rng.randrange(p) for _ in range(m)]
        # plant m pairs carrying independent directions so the image spans V
        planted = rng.sample(pairs, m)
        basis = _random_invertible(m, p, rng)
        for pr, row in zip(planted, basis):
            table[pr] = row
        A = AltMap(p, n, m, table)
        if is_valid(A):
            return A


def _random_invertible(m: int, p: int, rng: random.Random) -> list[list[int]]:
    while True:
        rows = [[rng.randrange(p) for _ in range(m)] for _ in range(m)]
        if m == 0 or fm.rank(FpMatrix.from_rows(rows, p)) == m:
            return rows
