"""Pure-Python (numpy) GF(q) matrix kernels.

Fallback backend with the same contract as the compiled one: all
matrices are 2-d uint8 arrays of field codes, all arithmetic goes
through the field's tables (with an integer fast path for prime
fields).  Shapes may be zero in either direction.
"""

from __future__ import annotations

import numpy as np


def mat_mul(gf, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    m, k = A.shape
    k2, n = B.shape
    assert k == k2, (A.shape, B.shape)
    if m == 0 or n == 0 or k == 0:
        return np.zeros((m, n), dtype=np.uint8)
    if gf.deg == 1:
        return ((A.astype(np.int64) @ B.astype(np.int64)) % gf.p).astype(np.uint8)
    add, mul = gf.add, gf.mul
    C = np.zeros((m, n), dtype=np.uint8)
    for t in range(k):
        C = add[C, mul[A[:, t][:, None], B[t, :][None, :]]]
    return C


def rref(gf, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (copy) and pivot column indices."""
    R = np.array(A, dtype=np.uint8, copy=True)
    m, n = R.shape
    add, mul, neg, inv = gf.add, gf.mul, gf.neg, gf.inv
    prime = gf.deg == 1
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        rows = np.nonzero(R[r:, c])[0]
        if rows.size == 0:
            continue
        pr = r + int(rows[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        pv = int(R[r, c])
        if pv != 1:
            R[r] = mul[int(inv[pv]), R[r]]
        others = np.nonzero(R[:, c])[0]
        others = others[others != r]
        if others.size:
            if prime:
                f = R[others, c].astype(np.int64)
                block = (R[others].astype(np.int64) - f[:, None] * R[r].astype(np.int64)) % gf.p
                R[others] = block.astype(np.uint8)
            else:
                f = R[others, c]
                R[others] = add[R[others], neg[mul[f[:, None], R[r][None, :]]]]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(gf, A: np.ndarray) -> int:
    return len(rref(gf, A)[1])


def right_nullspace(gf, A: np.ndarray) -> np.ndarray:
    """Rows form a basis of {x : A @ x == 0}; shape (nullity, n)."""
    m, n = A.shape
    R, pivots = rref(gf, A)
    free = [c for c in range(n) if c not in pivots]
    N = np.zeros((len(free), n), dtype=np.uint8)
    neg = gf.neg
    for i, fc in enumerate(free):
        N[i, fc] = 1
        for r, pc in enumerate(pivots):
            N[i, pc] = neg[R[r, fc]]
    return N


def solve(gf, A: np.ndarray, B: np.ndarray) -> np.ndarray | None:
    """One solution X of A @ X == B, or None if inconsistent.

    Free variables are set to zero, so the result is deterministic.
    """
    m, n = A.shape
    mb, k = B.shape
    assert m == mb
    aug = np.concatenate([A, B], axis=1)
    R, pivots = rref(gf, aug)
    if any(p >= n for p in pivots):
        return None
    X = np.zeros((n, k), dtype=np.uint8)
    for r, pc in enumerate(pivots):
        X[pc] = R[r, n:]
    return X


def inverse(gf, A: np.ndarray) -> np.ndarray | None:
    m, n = A.shape
    if m != n:
        return None
    if n == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    aug = np.concatenate([A, np.eye(n, dtype=np.uint8)], axis=1)
    R, pivots = rref(gf, aug)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        return None
    return np.array(R[:, n:], dtype=np.uint8)
