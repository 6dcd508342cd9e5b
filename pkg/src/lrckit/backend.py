"""Kernel dispatch: numba-accelerated hot loops with a pure-numpy fallback.

The backend is chosen by the LRCKIT_BACKEND environment variable:

  auto   (default) jit only when the field has dense tables and the job is
         big enough to amortize compilation
  numba  always jit (error if unavailable or the field is too large)
  numpy  never jit

Both paths visit candidates in the same order, so results are identical.
"""

from __future__ import annotations

import os

import numpy as np

from . import _numpy_kernels
from .gf import GF, TABLE_MAX

ENV_VAR = "LRCKIT_BACKEND"

# Below these job sizes the jit compile time dominates; stay on numpy.
MIN_JIT_ENUMERATION = 300_000
MIN_JIT_SCAN = 30_000

_UNLIMITED = np.int64(1) << 62

_numba_kernels = None
_numba_failed = False


def _jit_kernels():
    global _numba_kernels, _numba_failed
    if _numba_kernels is None and not _numba_failed:
        try:
            from . import _numba_kernels as mod
            _numba_kernels = mod
        except ImportError:
            _numba_failed = True
    return _numba_kernels


def numba_available() -> bool:
    return _jit_kernels() is not None


def resolve(gf: GF, work: int, kind: str = "enumeration") -> str:
    """Decide which backend a job of `work` candidate evaluations runs on."""
    mode = os.environ.get(ENV_VAR, "auto").lower()
    if mode not in ("auto", "numba", "numpy"):
        raise ValueError(f"{ENV_VAR} must be auto, numba or numpy, got {mode!r}")
    if mode == "numpy":
        return "numpy"
    if mode == "numba":
        if not numba_available():
            raise RuntimeError("LRCKIT_BACKEND=numba but numba is not importable")
        if gf.q > TABLE_MAX:
            raise ValueError(f"numba backend needs dense tables (q <= {TABLE_MAX})")
        return "numba"
    threshold = MIN_JIT_ENUMERATION if kind == "enumeration" else MIN_JIT_SCAN
    if gf.q <= TABLE_MAX and work >= threshold and numba_available():
        return "numba"
    return "numpy"


def min_codeword_weight(gf: GF, gen, backend: str | None = None):
    """(min weight, witness codeword) over nonzero codewords of rowspace(gen).

    `gen` must have linearly independent rows.
    """
    gen = np.ascontiguousarray(np.asarray(gen, dtype=np.int64))
    k, n = gen.shape
    if k == 0:
        raise ValueError("generator matrix has no rows")
    chosen = backend or resolve(gf, gf.q ** k, "enumeration")
    if chosen == "numba":
        w, cw = _jit_kernels().min_codeword_weight_jit(
            gen, gf.q, gf.add_table, gf.mul_table, gf.neg_table)
        return int(w), cw
    w, cw = _numpy_kernels.min_codeword_weight(gf, gen)
    return w, cw


def scan_dependent_columns(gf: GF, mat, size: int, limit: int | None = None,
                           backend: str | None = None):
    """First lexicographic dependent column subset of the given size.

    Returns (status, scanned, subset): status "found" | "none" | "limit";
    subset is a tuple of column indices when found, else None.
    """
    mat = np.ascontiguousarray(np.asarray(mat, dtype=np.int64))
    n = mat.shape[1]
    if not 1 <= size <= n:
        raise ValueError(f"subset size {size} out of range for {n} columns")
    from math import comb
    work = comb(n, size)
    lim = _UNLIMITED if limit is None else np.int64(limit)
    chosen = backend or resolve(gf, min(work, int(lim)), "scan")
    if chosen == "numba":
        status, scanned, subset = _jit_kernels().scan_dependent_columns_jit(
            mat, size, lim, gf.add_table, gf.mul_table, gf.inv_table, gf.neg_table)
        subset = tuple(int(c) for c in subset) if status == 0 else None
    else:
        status, scanned, subset = _numpy_kernels.scan_dependent_columns(
            gf, mat, size, int(lim))
        subset = tuple(int(c) for c in subset) if status == 0 else None
    return ("found", "none", "limit")[int(status)], int(scanned), subset
