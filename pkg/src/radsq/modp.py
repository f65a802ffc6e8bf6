"""Dense exact linear algebra over prime fields F_p.

Matrices are numpy ``int64`` arrays with entries in ``[0, p)``. Gaussian
elimination uses the first nonzero pivot in each column; no randomization, so
every basis returned here is a deterministic function of the input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Above this modulus a dot product of int64 residues could overflow.
_INT64_SAFE_P = 1 << 21


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int = 5

    def __post_init__(self):
        if not (2 <= self.p < 2**31) or not is_prime(self.p):
            raise ValueError(f"field modulus must be a prime in [2, 2^31), got {self.p}")


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    if p < _INT64_SAFE_P:
        return (a @ b) % p
    prod = a.astype(object) @ b.astype(object)
    return (prod % p).astype(np.int64)


# Below this many entries plain Python lists beat numpy's per-call overhead.
_SMALL = 120


def _rref_small(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    m = [[x % p for x in row] for row in a.tolist()]
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        if inv != 1:
            m[r] = [x * inv % p for x in m[r]]
        top = m[r]
        for i in range(rows):
            f = m[i][c]
            if f and i != r:
                m[i] = [(x - f * y) % p for x, y in zip(m[i], top)]
        pivots.append(c)
        r += 1
    return np.array(m, dtype=np.int64).reshape(rows, cols), pivots


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``a`` and its pivot columns."""
    if a.size <= _SMALL:
        return _rref_small(np.asarray(a), p)
    m = np.array(a, dtype=np.int64) % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    big = p >= _INT64_SAFE_P
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), -1, p)
        if inv != 1:
            m[r] = m[r] * inv % p if not big else np.array(
                [int(x) * inv % p for x in m[r]], dtype=np.int64
            )
        col = m[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            if big:
                for h in hit:
                    f = int(col[h])
                    m[h] = np.array(
                        [(int(x) - f * int(y)) % p for x, y in zip(m[h], m[r])],
                        dtype=np.int64,
                    )
            else:
                m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Basis of ``{x : a x = 0}`` as the columns of a matrix, plus the free
    coordinates. Row ``free[k]`` of the basis is the unit vector ``e_k``, so
    restricting to the free rows is a left inverse of the basis."""
    rows, cols = a.shape
    if rows == 0:
        return identity(cols), list(range(cols))
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = zeros(cols, len(free))
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-r[i, f]) % p
    return basis, free


def column_space(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Echelon basis of the column space (as columns) and its pivot rows."""
    if a.shape[1] == 0:
        return zeros(a.shape[0], 0), []
    r, pivots = rref(a.T, p)
    return r[: len(pivots)].T.copy(), pivots


def complement_units(a: np.ndarray, p: int) -> list[int]:
    """Coordinates whose unit vectors span a complement of ``colspace(a)``."""
    _, pivots = column_space(a, p)
    taken = set(pivots)
    return [i for i in range(a.shape[0]) if i not in taken]


def is_invertible(a: np.ndarray, p: int) -> bool:
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]
