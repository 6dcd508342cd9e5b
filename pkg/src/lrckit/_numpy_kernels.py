"""Pure-numpy twins of the jitted kernels.

Same enumeration orders and tie-breaking as the numba versions, so the two
backends return identical results, witnesses included.  The subset scan is
vectorized across batches of subsets to keep per-subset overhead down.
"""

from __future__ import annotations

from itertools import combinations, islice

import numpy as np

_CHUNK = 1 << 15
_SCAN_CHUNK = 1 << 13


def min_codeword_weight(gf, gen):
    """(weight, witness) over nonzero codewords, chunk-vectorized."""
    k, n = gen.shape
    q = gf.q
    total = q ** k
    best_w = n + 1
    best_cw = None
    for start in range(1, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        cw = np.zeros((idx.size, n), dtype=np.int64)
        for j in range(k):
            digit = (idx // q ** j) % q
            cw = gf.vadd(cw, gf.vmul(digit[:, None], gen[j][None, :]))
        weights = np.count_nonzero(cw, axis=1)
        i = int(np.argmin(weights))
        if int(weights[i]) < best_w:
            best_w = int(weights[i])
            best_cw = cw[i].copy()
    return best_w, best_cw


def _batch_dependent(gf, mat, combos):
    """Boolean mask over a batch of column subsets: True = linearly dependent.

    Batched Gaussian elimination; a subset is independent iff every one of
    its columns yields a pivot in order.
    """
    batch, s = combos.shape
    rows = mat.shape[0]
    if s > rows:
        return np.ones(batch, dtype=bool)
    work = np.ascontiguousarray(mat[:, combos].transpose(1, 0, 2))
    dep = np.zeros(batch, dtype=bool)
    b_idx = np.arange(batch)
    for c in range(s):
        col = work[:, c:, c]
        nonzero = col != 0
        has_pivot = nonzero.any(axis=1)
        dep |= ~has_pivot
        piv = c + nonzero.argmax(axis=1)
        row_c = work[b_idx, c, :].copy()
        work[b_idx, c, :] = work[b_idx, piv, :]
        work[b_idx, piv, :] = row_c
        pivot = work[:, c, c].copy()
        pivot[~has_pivot] = 1  # keep dead lanes defined; dep already set
        below = work[:, c + 1:, c]
        factors = gf.vmul(below, gf.vinv(pivot)[:, None])
        updates = gf.vmul(gf.vneg(factors)[:, :, None], work[:, c, None, c:])
        work[:, c + 1:, c:] = gf.vadd(work[:, c + 1:, c:], updates)
    return dep


def scan_dependent_columns(gf, mat, s, limit):
    """Lexicographic scan for a dependent size-s column subset.

    Returns (status, scanned, subset) with the same conventions as the
    jitted kernel: 0 found / 1 none / 2 limit reached.
    """
    n = mat.shape[1]
    scanned = 0
    subset_iter = combinations(range(n), s)
    while True:
        room = limit - scanned
        if room <= 0:
            exhausted = next(subset_iter, None) is None
            return (1 if exhausted else 2), scanned, None
        take = min(_SCAN_CHUNK, room)
        batch = list(islice(subset_iter, take))
        if not batch:
            return 1, scanned, None
        combos = np.array(batch, dtype=np.int64)
        dep = _batch_dependent(gf, mat, combos)
        hits = np.flatnonzero(dep)
        if hits.size:
            first = int(hits[0])
            return 0, scanned + first + 1, combos[first]
        scanned += len(batch)
        if len(batch) < take:
            return 1, scanned, None
