"""Dense exact linear algebra over a prime field F_p.

Matrices are numpy ``int64`` arrays with entries kept in ``[0, p)``. Any prime
below 2**31 is supported: the largest intermediate value in an elimination
step is ``(p - 1)**2 < 2**62``, which fits in a signed 64-bit integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import BadVectorLength, NonPrimeModulus

MAX_PRIME = 2**31


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or isinstance(p, bool):
        raise NonPrimeModulus(f"modulus must be an integer, got {p!r}")
    p = int(p)
    if not is_prime(p) or p >= MAX_PRIME:
        raise NonPrimeModulus(f"modulus {p} is not a prime below 2**31")
    return p


@dataclass(frozen=True, eq=False)
class FpMatrix:
    """A ``rows x cols`` matrix over F_p."""

    p: int
    data: np.ndarray

    def __post_init__(self):
        check_prime(self.p)
        a = np.asarray(self.data)
        if a.ndim != 2:
            raise BadVectorLength(f"matrix data must be 2-dimensional, got shape {a.shape}")
        a = a.astype(np.int64, copy=True)
        if a.size and (a.min() < 0 or a.max() >= self.p):
            raise ValueError(f"entries must lie in [0, {self.p})")
        a.setflags(write=False)
        object.__setattr__(self, "data", a)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], p: int, cols: int | None = None) -> FpMatrix:
        """Build a matrix from integer rows, reducing every entry mod ``p``."""
        rows = [list(r) for r in rows]
        if not rows:
            return cls.zeros(0, cols or 0, p)
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise BadVectorLength("rows have differing lengths")
        if not width:
            return cls.zeros(len(rows), 0, p)
        return cls(p, (np.array(rows, dtype=object) % p).astype(np.int64))

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> FpMatrix:
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, n: int, p: int) -> FpMatrix:
        return cls(p, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def entries(self) -> list[int]:
        """Row-major residues."""
        return [int(x) for x in self.data.ravel()]

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.data]

    def transpose(self) -> FpMatrix:
        return FpMatrix(self.p, self.data.T)

    def __matmul__(self, other: FpMatrix) -> FpMatrix:
        if self.p != other.p:
            raise ValueError("moduli differ")
        return FpMatrix(self.p, matmul_mod(self.data, other.data, self.p))

    def __eq__(self, other):
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.data, other.data)

    def __repr__(self):
        return f"FpMatrix(p={self.p}, {self.tolist()})"


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """``a @ b mod p`` without int64 overflow.

    A dot product of length ``L`` can reach ``L * (p-1)**2``; for large ``p`` we
    accumulate one inner index at a time and reduce after each step.
    """
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    inner = a.shape[-1]
    if inner == 0:
        return np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
    if inner * (p - 1) ** 2 < 2**63:
        return (a @ b) % p
    out = np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
    for i in range(inner):
        out = (out + np.multiply.outer(a[..., i], b[i]) % p) % p
    return out


def _as_array(M) -> tuple[np.ndarray, int]:
    if isinstance(M, FpMatrix):
        return M.data, M.p
    raise TypeError(f"expected FpMatrix, got {type(M).__name__}")


def _eliminate(a: np.ndarray, p: int, reduced: bool) -> tuple[np.ndarray, list[int]]:
    """Gauss(-Jordan) elimination in place on a writable copy; returns pivots."""
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        if inv != 1:
            a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        if not reduced:
            col[:r] = 0
        targets = np.flatnonzero(col)
        if targets.size:
            a[targets] = (a[targets] - np.multiply.outer(col[targets], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(M: FpMatrix) -> int:
    a, p = _as_array(M)
    if a.size == 0:
        return 0
    _, pivots = _eliminate(a.copy(), p, reduced=False)
    return len(pivots)


def rref(M: FpMatrix) -> tuple[FpMatrix, list[int]]:
    """Reduced row-echelon form and the list of pivot columns."""
    a, p = _as_array(M)
    out, pivots = _eliminate(a.copy(), p, reduced=True)
    return FpMatrix(p, out), pivots


def kernel_basis(M: FpMatrix) -> list[list[int]]:
    """Basis of the right null space ``{v : M v = 0}``, one vector per free column."""
    a, p = _as_array(M)
    R, pivots = _eliminate(a.copy(), p, reduced=True)
    pivot_set = set(pivots)
    basis = []
    for f in range(a.shape[1]):
        if f in pivot_set:
            continue
        v = [0] * a.shape[1]
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = int(-R[i, f] % p)
        basis.append(v)
    return basis


def in_span(v: Sequence[int], S: Sequence[Sequence[int]], p: int) -> bool:
    """True iff ``v`` lies in the F_p-span of the vectors ``S``."""
    v = [x % p for x in v]
    if not S:
        return not any(v)
    if any(len(s) != len(v) for s in S):
        raise BadVectorLength("vector lengths differ")
    base = FpMatrix.from_rows(S, p)
    return rank(base) == rank(FpMatrix.from_rows([*S, v], p))


def inverse(M: FpMatrix) -> FpMatrix | None:
    """Inverse of a square matrix, or ``None`` when singular."""
    a, p = _as_array(M)
    n = a.shape[0]
    if a.shape != (n, n):
        raise BadVectorLength("inverse needs a square matrix")
    aug = np.concatenate([a, np.eye(n, dtype=np.int64)], axis=1)
    R, pivots = _eliminate(aug, p, reduced=True)
    if pivots[:n] != list(range(n)):
        return None
    return FpMatrix(p, R[:, n:])
