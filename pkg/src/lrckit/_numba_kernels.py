"""Jitted hot loops: codeword-weight enumeration and column-subset scans.

Field arithmetic comes in as dense lookup tables so the kernels stay branch
free.  Importing this module triggers numba; callers go through
`lrckit.backend` which imports lazily and falls back to the numpy twins.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def min_codeword_weight_jit(gen, q, add_t, mul_t, neg_t):
    """Minimum Hamming weight over all nonzero codewords of the row space.

    Messages are walked in mixed-radix odometer order; each step updates the
    running codeword by delta * row, so the cost per message is O(n) on the
    changed digits only.  Returns (weight, witness codeword).
    """
    k, n = gen.shape
    digits = np.zeros(k, dtype=np.int64)
    cw = np.zeros(n, dtype=np.int64)
    best_w = n + 1
    best_cw = np.zeros(n, dtype=np.int64)
    while True:
        j = 0
        while j < k:
            old = digits[j]
            new = old + 1
            if new == q:
                new = 0
            digits[j] = new
            delta = add_t[new, neg_t[old]]
            row = gen[j]
            for t in range(n):
                cw[t] = add_t[cw[t], mul_t[delta, row[t]]]
            if new != 0:
                break
            j += 1
        if j == k:
            break
        w = 0
        for t in range(n):
            if cw[t] != 0:
                w += 1
        if w < best_w:
            best_w = w
            for t in range(n):
                best_cw[t] = cw[t]
    return best_w, best_cw


@njit(cache=True)
def scan_dependent_columns_jit(mat, s, limit, add_t, mul_t, inv_t, neg_t):
    """Scan size-s column subsets of `mat` in lexicographic order.

    Stops at the first linearly dependent subset.  Returns
    (status, scanned, subset): status 0 = dependent subset found,
    1 = all subsets independent, 2 = `limit` subsets examined without
    finishing.
    """
    nrows, n = mat.shape
    combo = np.arange(s, dtype=np.int64)
    work = np.empty((nrows, s), dtype=np.int64)
    scanned = np.int64(0)
    while True:
        if scanned >= limit:
            return 2, scanned, np.empty(0, dtype=np.int64)
        scanned += 1
        for j in range(s):
            col = combo[j]
            for i in range(nrows):
                work[i, j] = mat[i, col]
        rk = 0
        dependent = False
        for col in range(s):
            piv = -1
            for i in range(rk, nrows):
                if work[i, col] != 0:
                    piv = i
                    break
            if piv == -1:
                dependent = True
                break
            if piv != rk:
                for j in range(col, s):
                    tmp = work[rk, j]
                    work[rk, j] = work[piv, j]
                    work[piv, j] = tmp
            pinv = inv_t[work[rk, col]]
            for i in range(rk + 1, nrows):
                f = work[i, col]
                if f != 0:
                    fac = neg_t[mul_t[f, pinv]]
                    for j in range(col, s):
                        work[i, j] = add_t[work[i, j], mul_t[fac, work[rk, j]]]
            rk += 1
        if dependent:
            return 0, scanned, combo.copy()
        i = s - 1
        while i >= 0 and combo[i] == n - s + i:
            i -= 1
        if i < 0:
            return 1, scanned, np.empty(0, dtype=np.int64)
        combo[i] += 1
        for j in range(i + 1, s):
            combo[j] = combo[j - 1] + 1
