"""The linear map ``Psi: U (x) U (x) U -> V (x) U`` induced by an alternating map,

    Psi(x, y, z) = A(x, y) (x) z + A(y, z) (x) x + A(z, x) (x) y,

its exact rank, and combinatorial lower bounds on that rank.

Columns of a Psi matrix are indexed by ``(t, u)`` with ``t`` a coordinate of V
and ``u`` a basis vector of U, at position ``t * n + (u - 1)``. Rows are the
triples ``i < j < k`` in increasing triple order; triples with a repeated
index are omitted since Psi vanishes on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np

from . import fieldmat as fm
from .altmap import AltMap
from .errors import HypothesisViolated, InfeasibleDimensions
from .fieldmat import FpMatrix
from .greedy import ordered_triples, pair_sort_key
from .trigraph import rt_decompose

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class PsiMatrix:
    matrix: FpMatrix
    triples: tuple[Triple, ...]
    n: int
    m: int
    source: AltMap

    def row(self, triple: Sequence[int]) -> list[int]:
        return self.matrix.data[self.triples.index(tuple(sorted(triple)))].tolist()


def psi_vector(A: AltMap, x: int, y: int, z: int) -> list[int]:
    """``Psi(e_x, e_y, e_z)`` in any orientation, as a length ``m*n`` vector."""
    n, p = A.n, A.p
    out = np.zeros((A.m, n), dtype=np.int64)
    for (a, b), c in (((x, y), z), ((y, z), x), ((z, x), y)):
        out[:, c - 1] += A.value(a, b)
    return (out.reshape(-1) % p).tolist()


def psi_matrix(A: AltMap) -> PsiMatrix:
    n, m, p = A.n, A.m, A.p
    triples = tuple(ordered_triples(n))
    if not triples or m == 0:
        return PsiMatrix(FpMatrix.zeros(len(triples), m * n, p), triples, n, m, A)
    T = A.tensor()
    idx = np.array(triples, dtype=np.int64) - 1
    i, j, k = idx[:, 0], idx[:, 1], idx[:, 2]
    rows = np.zeros((len(triples), m, n), dtype=np.int64)
    r = np.arange(len(triples))
    # each term lands in a different U-column, so plain assignment is safe
    rows[r, :, k] = T[i, j]
    rows[r, :, i] = T[j, k]
    rows[r, :, j] = T[k, i]
    return PsiMatrix(FpMatrix(p, rows.reshape(len(triples), m * n) % p), triples, n, m, A)


def dim_im_psi(A: AltMap) -> int:
    return fm.rank(psi_matrix(A).matrix)


def script_w(pairs: Sequence[Sequence[int]], n: int, order: Sequence[int] | None = None) -> list[Triple]:
    """Triples containing at least one of ``pairs``, in increasing triple order."""
    pairset = {tuple(sorted(pr)) for pr in pairs}
    found = set()
    for a, b in pairset:
        for c in range(1, n + 1):
            if c != a and c != b:
                found.add(tuple(sorted((a, b, c))))
    return sorted(found, key=pair_sort_key(order))


def w_vectors(A: AltMap, pairs: Sequence[Sequence[int]], order: Sequence[int] | None = None) -> list[list[int]]:
    """``Psi(u_i (x) u_j (x) u_k)`` with ``u_i < u_j < u_k`` for each triple of ``script_w``."""
    rank = {g: pos for pos, g in enumerate(order)} if order is not None else None
    out = []
    for tr in script_w(pairs, A.n, order):
        i, j, k = sorted(tr, key=(lambda g: rank[g]) if rank else None)
        out.append(psi_vector(A, i, j, k))
    return out


def lb_estimate(n: int, m: int) -> int:
    """``C(n,3) - C(r,3) - C(t,2)`` where ``C(n,2) - m = C(r,2) + t``."""
    if m < 0 or m > comb(n, 2):
        raise InfeasibleDimensions(f"need 0 <= m <= C(n,2); got n={n}, m={m}")
    d = rt_decompose(comb(n, 2) - m)
    return comb(n, 3) - comb(d.r, 3) - comb(d.t, 2)


def lb_nontree(n: int, m: int) -> int:
    """Lower bound on the triple count when the pair basis is not a star."""
    if m < 2 or m > comb(n, 2):
        raise HypothesisViolated(f"a non-star pair set needs 2 <= m <= C(n,2); got n={n}, m={m}")
    return sum(n - i for i in range(2, m + 2)) + (m - 2)


def lb_special_thm38(d: int, k: int) -> int:
    if not (d > k + 1 and k > 2):
        raise HypothesisViolated(f"need d > k + 1 and k > 2; got d={d}, k={k}")
    return sum(d - i for i in range(2, k + 2)) + (k - 2)
