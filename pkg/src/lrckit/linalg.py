"""Dense exact linear algebra over GF(q).

Matrices are 2-D numpy arrays of element representatives (int64); the field
is passed alongside.  Pivoting is deterministic (leftmost column, topmost
nonzero row) so results are byte-stable across runs and platforms.
"""

from __future__ import annotations

import numpy as np

from .gf import GF


def as_matrix(gf: GF, mat) -> np.ndarray:
    """Validate and convert to a 2-D int64 array of field representatives."""
    a = np.asarray(mat, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={a.ndim}")
    if a.size and (a.min() < 0 or a.max() >= gf.q):
        raise ValueError(f"matrix entries must lie in [0, {gf.q})")
    return a


def rref(gf: GF, mat) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row-echelon form and its pivot columns."""
    r_mat = as_matrix(gf, mat).copy()
    nrows, ncols = r_mat.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(r_mat[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            r_mat[[r, pr]] = r_mat[[pr, r]]
        pivot = int(r_mat[r, c])
        if pivot != 1:
            r_mat[r] = gf.vmul(gf.inv(pivot), r_mat[r])
        col = r_mat[:, c].copy()
        col[r] = 0
        rows_nz = np.flatnonzero(col)
        if rows_nz.size:
            factors = gf.vneg(col[rows_nz])
            r_mat[rows_nz] = gf.vadd(r_mat[rows_nz],
                                     gf.vmul(factors[:, None], r_mat[r][None, :]))
        pivots.append(c)
        r += 1
    return r_mat, tuple(pivots)


def rank(gf: GF, mat) -> int:
    return len(rref(gf, mat)[1])


def null_space(gf: GF, mat) -> np.ndarray:
    """Basis of the right kernel {x : Mx = 0}, one row per basis vector.

    The basis is the canonical one read off the free columns of the rref:
    basis vector for free column f has x[f] = 1 and x[p] = -R[j, f] for
    each pivot column p.
    """
    r_mat, pivots = rref(gf, mat)
    ncols = r_mat.shape[1]
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for j, p in enumerate(pivots):
            basis[row, p] = gf.neg(int(r_mat[j, f]))
    return basis


def solve(gf: GF, a, b):
    """One solution x of Ax = b (free variables set to 0), or None."""
    a = as_matrix(gf, a)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    if b.shape[0] != a.shape[0]:
        raise ValueError("right-hand side length mismatch")
    aug, pivots = rref(gf, np.hstack([a, b[:, None]]))
    n = a.shape[1]
    if pivots and pivots[-1] == n:
        return None
    x = np.zeros(n, dtype=np.int64)
    for j, p in enumerate(pivots):
        x[p] = aug[j, n]
    return x


def matmul(gf: GF, a, b) -> np.ndarray:
    a = as_matrix(gf, a)
    b = as_matrix(gf, b)
    if a.shape[1] != b.shape[0]:
        raise ValueError("inner dimensions differ")
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = gf.vadd(out, gf.vmul(a[:, k][:, None], b[k][None, :]))
    return out


def matvec(gf: GF, a, x) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64).reshape(-1)
    return matmul(gf, a, x[:, None])[:, 0]


def submatrix_nonsingular(gf: GF, mat, row_idx, col_idx) -> bool:
    """True iff the selected square minor has full rank."""
    mat = as_matrix(gf, mat)
    row_idx = list(row_idx)
    col_idx = list(col_idx)
    if len(row_idx) != len(col_idx):
        raise ValueError("row and column selections must have equal length")
    nrows, ncols = mat.shape
    if any(i < 0 or i >= nrows for i in row_idx):
        raise ValueError("row index out of range")
    if any(j < 0 or j >= ncols for j in col_idx):
        raise ValueError("column index out of range")
    sub = mat[np.ix_(row_idx, col_idx)]
    return rank(gf, sub) == len(row_idx)
