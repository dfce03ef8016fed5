"""Dense exact linear algebra: numpy over F_p, Fraction lists over Q."""
from __future__ import annotations

from fractions import Fraction

import numpy as np


def rref_mod_p(A, p: int):
    """Reduced row echelon form over F_p.  Returns ``(R, pivots)`` with R an
    int64 array holding only the nonzero rows."""
    A = np.array(A, dtype=np.int64) % p
    if A.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            A[hit] = (A[hit] - np.outer(col[hit], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank_mod_p(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref_mod_p(A, p)[1])


def nullspace_mod_p(A, p: int):
    """Basis of {v : A v = 0} over F_p, one vector per free column; the
    vector for free column f has its last nonzero entry at f."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = rref_mod_p(A, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    out = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        out[t, f] = 1
        for r, c in enumerate(pivots):
            if c < f:
                out[t, c] = (-R[r, f]) % p
    return out


def rref_qq(rows):
    """RREF of a list of Fraction rows; returns ``(R, pivots)``."""
    A = [[Fraction(x) for x in row] for row in rows]
    if not A:
        return [], []
    cols = len(A[0])
    pivots = []
    r = 0
    for c in range(cols):
        k = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank_qq(rows) -> int:
    return len(rref_qq(rows)[1])


def nullspace_qq(rows, cols: int):
    R, pivots = rref_qq(rows)
    free = [c for c in range(cols) if c not in set(pivots)]
    out = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -R[r][f]
        out.append(v)
    return out
