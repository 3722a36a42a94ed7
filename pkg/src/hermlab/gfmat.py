"""Dense exact linear algebra over a table-mode finite field.

Matrices are numpy integer arrays of field codes (see ``gf``).  Row
reduction and products run as whole-array table lookups, which keeps the
Gaussian elimination loops short even from Python.  All routines require a
``FieldSpec`` with dense ADD/MUL tables.
"""

from __future__ import annotations

import numpy as np


def _tables(spec):
    if spec.ADD is None:
        raise ValueError(f"{spec!r} has no dense tables; field too large")
    return spec.ADD, spec.MUL, spec.INV, spec.NEG


def rref(spec, M):
    """Reduced row echelon form.  Returns (R, pivot_columns); R has one row
    per pivot (zero rows dropped)."""
    ADD, MUL, INV, NEG = _tables(spec)
    R = np.array(M, dtype=spec.ADD.dtype, copy=True)
    if R.ndim != 2:
        raise ValueError("matrix expected")
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        inv = INV[R[r, c]]
        if inv != 1:
            R[r] = MUL[R[r], inv]
        col = R[:, c].copy()
        col[r] = 0
        tgt = np.nonzero(col)[0]
        if tgt.size:
            factors = NEG[col[tgt]]
            R[tgt] = ADD[R[tgt], MUL[factors[:, None], R[r][None, :]]]
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(spec, M):
    return len(rref(spec, M)[1])


def right_nullspace(spec, M):
    """Canonical (RREF) basis of {x : M x = 0}, one solution per row."""
    R, piv = rref(spec, M)
    n = np.asarray(M).shape[1]
    pivset = set(piv)
    free = np.array([c for c in range(n) if c not in pivset], dtype=np.int64)
    basis = np.zeros((len(free), n), dtype=spec.ADD.dtype)
    if len(free):
        basis[np.arange(len(free)), free] = 1
        if piv:
            basis[:, np.array(piv)] = spec.NEG[R[:, free]].T
    if basis.shape[0] > 1:
        basis, _ = rref(spec, basis)
    return basis


def left_nullspace(spec, M):
    """Canonical basis of {c : c M = 0} (row vectors)."""
    return right_nullspace(spec, np.asarray(M).T)


def matmul(spec, A, B):
    ADD, MUL, _, _ = _tables(spec)
    A = np.asarray(A)
    B = np.asarray(B)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=spec.ADD.dtype)
    for t in range(A.shape[1]):
        col = A[:, t]
        if not col.any():
            continue
        out = ADD[out, MUL[col[:, None], B[t][None, :]]]
    return out


def matvec(spec, A, v):
    return matmul(spec, A, np.asarray(v).reshape(-1, 1))[:, 0]


def inverse(spec, A):
    A = np.asarray(A)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("square matrix expected")
    aug = np.zeros((n, 2 * n), dtype=spec.ADD.dtype)
    aug[:, :n] = A
    aug[np.arange(n), n + np.arange(n)] = 1
    R, piv = rref(spec, aug)
    if piv[:n] != list(range(n)):
        raise np.linalg.LinAlgError("matrix is singular")
    return R[:, n:]


def is_zero(M):
    return not np.asarray(M).any()


def row_space_equal(spec, A, B):
    RA, pa = rref(spec, A)
    RB, pb = rref(spec, B)
    return pa == pb and RA.shape == RB.shape and (RA == RB).all()
