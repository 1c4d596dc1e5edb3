# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(q) matrix kernels.

Same contract as ``_pykern``: uint8 code matrices, table-driven field
arithmetic.  Plain nested C loops beat the numpy fallback on the tiny
matrices this package lives on (dims mostly <= 10).
"""

import numpy as np


def mat_mul(gf, A, B):
    cdef const unsigned char[:, :] a = np.ascontiguousarray(A, dtype=np.uint8)
    cdef const unsigned char[:, :] b = np.ascontiguousarray(B, dtype=np.uint8)
    cdef Py_ssize_t m = a.shape[0], k = a.shape[1], n = b.shape[1]
    assert b.shape[0] == k
    out = np.zeros((m, n), dtype=np.uint8)
    if m == 0 or n == 0 or k == 0:
        return out
    cdef unsigned char[:, :] c = out
    cdef const unsigned char[:, :] add = gf.add
    cdef const unsigned char[:, :] mul = gf.mul
    cdef Py_ssize_t i, j, t
    cdef unsigned char acc, av
    for i in range(m):
        for j in range(n):
            acc = 0
            for t in range(k):
                av = a[i, t]
                if av:
                    acc = add[acc, mul[av, b[t, j]]]
            c[i, j] = acc
    return out


cdef Py_ssize_t _rref_inplace(unsigned char[:, :] R,
                              const unsigned char[:, :] add,
                              const unsigned char[:, :] mul,
                              const unsigned char[:] neg,
                              const unsigned char[:] inv,
                              Py_ssize_t npivot_cols,
                              Py_ssize_t[:] pivots):
    """Reduced row echelon over the full width; pivots searched in the
    first npivot_cols columns.  Returns the rank; fills pivots[]."""
    cdef Py_ssize_t m = R.shape[0], n = R.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef unsigned char pv, f, tmp
    for c in range(npivot_cols):
        if r == m:
            break
        pr = -1
        for i in range(r, m):
            if R[i, c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(n):
                tmp = R[r, j]
                R[r, j] = R[pr, j]
                R[pr, j] = tmp
        pv = R[r, c]
        if pv != 1:
            pv = inv[pv]
            for j in range(n):
                R[r, j] = mul[pv, R[r, j]]
        for i in range(m):
            if i != r:
                f = R[i, c]
                if f:
                    for j in range(n):
                        R[i, j] = add[R[i, j], neg[mul[f, R[r, j]]]]
        pivots[r] = c
        r += 1
    return r


def rref(gf, A):
    R = np.array(A, dtype=np.uint8, copy=True, order="C")
    cdef Py_ssize_t m = R.shape[0], n = R.shape[1]
    if m == 0 or n == 0:
        return R, []
    piv = np.empty(min(m, n), dtype=np.intp)
    cdef Py_ssize_t rk = _rref_inplace(R, gf.add, gf.mul, gf.neg, gf.inv, n, piv)
    return R, [int(p) for p in piv[:rk]]


def rank(gf, A):
    return len(rref(gf, A)[1])


def right_nullspace(gf, A):
    cdef Py_ssize_t n = A.shape[1]
    R, pivots = rref(gf, A)
    free = [c for c in range(n) if c not in pivots]
    N = np.zeros((len(free), n), dtype=np.uint8)
    neg = gf.neg
    for i, fc in enumerate(free):
        N[i, fc] = 1
        for r, pc in enumerate(pivots):
            N[i, pc] = neg[R[r, fc]]
    return N


def solve(gf, A, B):
    cdef Py_ssize_t m = A.shape[0], n = A.shape[1], k = B.shape[1]
    assert B.shape[0] == m
    aug = np.concatenate([np.asarray(A, dtype=np.uint8), np.asarray(B, dtype=np.uint8)], axis=1)
    R, pivots = rref(gf, aug)
    if any(p >= n for p in pivots):
        return None
    X = np.zeros((n, k), dtype=np.uint8)
    for r, pc in enumerate(pivots):
        X[pc] = R[r, n:]
    return X


def inverse(gf, A):
    cdef Py_ssize_t m = A.shape[0], n = A.shape[1]
    if m != n:
        return None
    if n == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    aug = np.concatenate([np.asarray(A, dtype=np.uint8), np.eye(n, dtype=np.uint8)], axis=1)
    R, pivots = rref(gf, aug)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        return None
    return np.array(R[:, n:], dtype=np.uint8)
