"""Linear-code semantics: dimension, exact minimum distance by two
independent algorithms, (r, delta) locality over disjoint repair groups,
and assembly of the standard-form parity-check matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import backend, linalg
from .bounds import global_parity_count, is_singleton_optimal, singleton_distance_bound
from .errors import BudgetExceededError, DegenerateCodeError, LocalityError
from .gf import GF

__all__ = [
    "LinearCode", "LrcProfile", "StandardFormParts", "DEFAULT_BUDGET",
    "min_distance", "distance_at_least", "check_disjoint_locality",
    "assemble_standard_form", "is_singleton_optimal",
    "singleton_distance_bound", "global_parity_count",
]

DEFAULT_BUDGET = 10_000_000


class LinearCode:
    """A q-ary [n, k] linear code given by a parity-check matrix.

    The dimension is always recomputed as n - rank(H); no claim embedded in
    the matrix is trusted.
    """

    def __init__(self, gf: GF, parity_check):
        self.gf = gf
        self.H = linalg.as_matrix(gf, parity_check)
        if self.H.shape[1] == 0:
            raise ValueError("code length must be positive")

    @property
    def n(self) -> int:
        return self.H.shape[1]

    @cached_property
    def h_rank(self) -> int:
        return linalg.rank(self.gf, self.H)

    @property
    def k(self) -> int:
        return self.n - self.h_rank

    @cached_property
    def generator_matrix(self) -> np.ndarray:
        """A k x n generator matrix (basis of the right kernel of H)."""
        return linalg.null_space(self.gf, self.H)

    def contains(self, word) -> bool:
        word = np.asarray(word, dtype=np.int64)
        return not np.any(linalg.matvec(self.gf, self.H, word))

    def __repr__(self):
        return f"LinearCode(n={self.n}, k={self.k}, {self.gf!r})"


@dataclass(frozen=True)
class LrcProfile:
    """Disjoint (r, delta) repair-group structure of a code."""
    r: int
    delta: int
    ell: int
    groups: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class StandardFormParts:
    """Blocks of the standard-form parity-check matrix.

    q_blocks[i] is the (delta-1) x r nonzero block completing the i-th local
    identity; v_blocks[i] is the u x r slice of the global parity rows under
    the same columns.
    """
    q_blocks: tuple
    v_blocks: tuple
    u: int


# ---------------------------------------------------------------------------
# Minimum distance, two independent strategies
# ---------------------------------------------------------------------------

def _enumeration_distance(code: LinearCode, backend_name=None):
    gen = code.generator_matrix
    w, cw = backend.min_codeword_weight(code.gf, gen, backend=backend_name)
    return w, cw


def _codeword_from_dependency(code: LinearCode, cols):
    """Codeword supported on a minimal dependent column set of H."""
    basis = linalg.null_space(code.gf, code.H[:, list(cols)])
    if basis.shape[0] == 0:
        raise AssertionError("claimed dependent columns are independent")
    word = np.zeros(code.n, dtype=np.int64)
    word[list(cols)] = basis[0]
    return word


def _dependency_distance(code: LinearCode, budget, backend_name=None):
    """Smallest s such that some s columns of H are linearly dependent."""
    n = code.n
    spent = 0
    for s in range(1, code.h_rank + 2):
        status, scanned, subset = backend.scan_dependent_columns(
            code.gf, code.H, s, limit=budget - spent, backend=backend_name)
        spent += scanned
        if status == "limit":
            raise BudgetExceededError(
                f"column-dependency search exceeded budget {budget} at subset size {s}")
        if status == "found":
            return s, _codeword_from_dependency(code, subset)
    raise AssertionError("no dependency found although k >= 1")


def min_distance(code: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """Exact minimum distance.

    Enumerates all q^k codewords when that fits the budget, otherwise finds
    the smallest linearly dependent column set of H (also budgeted).  The two
    strategies agree; the choice is purely computational.
    """
    d, _, _ = min_distance_with_witness(code, budget)
    return d


def min_distance_with_witness(code: LinearCode, budget: int = DEFAULT_BUDGET):
    """(d, witness codeword of weight d, strategy name)."""
    if code.k == 0:
        raise DegenerateCodeError("the zero code has no minimum distance")
    if code.gf.q ** code.k <= budget:
        d, cw = _enumeration_distance(code)
        return d, cw, "enumeration"
    d, cw = _dependency_distance(code, budget)
    return d, cw, "column_dependency"


def distance_at_least(code: LinearCode, t: int, budget: int | None = None) -> bool:
    """True iff every (t-1)-subset of columns of H is linearly independent,
    i.e. the minimum distance is at least t.
    """
    if code.k == 0:
        raise DegenerateCodeError("the zero code has no minimum distance")
    if not 1 <= t <= code.n + 1:
        raise ValueError(f"need 1 <= t <= n+1, got t={t}")
    s = t - 1
    if s == 0:
        return True
    if s > code.h_rank:
        # any subset larger than rank(H) is dependent
        return False
    status, _, _subset = backend.scan_dependent_columns(code.gf, code.H, s,
                                                        limit=budget)
    if status == "limit":
        raise BudgetExceededError(f"independence scan exceeded budget {budget}")
    return status == "none"


# ---------------------------------------------------------------------------
# Locality
# ---------------------------------------------------------------------------

def check_disjoint_locality(code: LinearCode, r: int, delta: int,
                            budget: int = DEFAULT_BUDGET) -> LrcProfile:
    """Verify that the consecutive length-(r+delta-1) blocks are repair
    groups whose punctured codes are [r+delta-1, r, delta] MDS.

    Returns the profile, or raises LocalityError naming the first offending
    block and whether its dimension or its distance failed.
    """
    width = r + delta - 1
    if code.n % width:
        raise ValueError(f"group width {width} does not divide n = {code.n}")
    ell = code.n // width
    if ell == 0:
        raise ValueError("no repair groups")
    gen = code.generator_matrix
    groups = []
    for i in range(ell):
        cols = list(range(i * width, (i + 1) * width))
        local = gen[:, cols]
        reduced, pivots = linalg.rref(code.gf, local)
        dim = len(pivots)
        if dim != r:
            raise LocalityError(i, "dimension",
                                f"group {i} punctures to dimension {dim}, expected {r}")
        local_basis = reduced[:dim]
        local_code = LinearCode(code.gf, linalg.null_space(code.gf, local_basis))
        d_local = min_distance(local_code, budget)
        if d_local != delta:
            raise LocalityError(i, "distance",
                                f"group {i} punctured distance {d_local}, expected {delta}")
        groups.append(tuple(cols))
    return LrcProfile(r=r, delta=delta, ell=ell, groups=tuple(groups))


# ---------------------------------------------------------------------------
# Standard form
# ---------------------------------------------------------------------------

def assemble_standard_form(parts: StandardFormParts, gf: GF, r: int,
                           delta: int) -> LinearCode:
    """Build the block parity-check matrix: per group a (I_{delta-1} | Q_i)
    locality block on the diagonal, and (0 | V_i) in the u global parity
    rows underneath.
    """
    ell = len(parts.q_blocks)
    if ell == 0:
        raise ValueError("need at least one group")
    if len(parts.v_blocks) != ell:
        raise ValueError("q_blocks and v_blocks must have equal length")
    u = parts.u
    width = r + delta - 1
    n = ell * width
    rows = ell * (delta - 1) + u
    h = np.zeros((rows, n), dtype=np.int64)
    for i in range(ell):
        qb = linalg.as_matrix(gf, parts.q_blocks[i])
        vb = linalg.as_matrix(gf, parts.v_blocks[i])
        if qb.shape != (delta - 1, r):
            raise ValueError(f"Q block {i} has shape {qb.shape}, "
                             f"expected {(delta - 1, r)}")
        if vb.shape != (u, r):
            raise ValueError(f"V block {i} has shape {vb.shape}, expected {(u, r)}")
        if np.any(qb == 0):
            raise ValueError(f"Q block {i} contains a zero entry")
        top = i * (delta - 1)
        left = i * width
        h[top:top + delta - 1, left:left + delta - 1] = np.eye(delta - 1, dtype=np.int64)
        h[top:top + delta - 1, left + delta - 1:left + width] = qb
        if u:
            h[ell * (delta - 1):, left + delta - 1:left + width] = vb
    return LinearCode(gf, h)
