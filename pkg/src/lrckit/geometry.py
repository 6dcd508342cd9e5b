"""The projective plane PG(2, q): points, lines, incidence, line families,
pencil (sunflower) structure, and the constant-weight code cut out of a
non-concurrent family.

Points and lines are canonical triples over GF(q), normalized so the
leftmost nonzero coordinate is 1; a point P lies on a line with dual triple
L iff sum_j P_j * L_j = 0.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ConditionNotSatisfiedError, SearchLimitExceededError
from .gf import GF


@functools.lru_cache(maxsize=None)
def projective_plane(gf: GF) -> "ProjectivePlane":
    return ProjectivePlane(gf)


class ProjectivePlane:
    """PG(2, q) with precomputed incidence bitmasks.

    Both the q^2+q+1 points and the q^2+q+1 lines are listed in lexicographic
    order of their coordinate representatives, which every downstream
    "first" choice inherits.
    """

    def __init__(self, gf: GF):
        if gf.q < 2:
            raise ValueError("projective plane needs q >= 2")
        self.gf = gf
        self.q = gf.q
        q = gf.q
        triples = [(0, 0, 1)]
        triples += [(0, 1, c) for c in range(q)]
        triples += [(1, b, c) for b in range(q) for c in range(q)]
        self.points: tuple = tuple(triples)
        self.lines: tuple = tuple(triples)
        self.point_index = {p: i for i, p in enumerate(self.points)}
        self.line_index = dict(self.point_index)
        masks = []
        for line in self.lines:
            m = 0
            for pi, pt in enumerate(self.points):
                if self.incident(pt, line):
                    m |= 1 << pi
            masks.append(m)
        self.line_masks: tuple = tuple(masks)
        pmasks = [0] * len(self.points)
        for li, m in enumerate(self.line_masks):
            for pi in _bit_indices(m):
                pmasks[pi] |= 1 << li
        self.point_line_masks: tuple = tuple(pmasks)

    def incident(self, point, line) -> bool:
        gf = self.gf
        acc = 0
        for a, b in zip(point, line):
            acc = gf.add(acc, gf.mul(a, b))
        return acc == 0

    def normalize(self, triple):
        """Canonical representative of the 1-subspace spanned by `triple`."""
        t = tuple(int(c) for c in triple)
        if all(c == 0 for c in t):
            raise ValueError("the zero triple spans no projective point")
        lead = next(c for c in t if c != 0)
        if lead == 1:
            return t
        s = self.gf.inv(lead)
        return tuple(self.gf.mul(s, c) for c in t)

    def line_points(self, line) -> tuple:
        mask = self.line_masks[self.line_index[self.normalize(line)]]
        return tuple(self.points[i] for i in _bit_indices(mask))

    def lines_through(self, point) -> tuple:
        mask = self.point_line_masks[self.point_index[self.normalize(point)]]
        return tuple(self.lines[i] for i in _bit_indices(mask))

    def intersect(self, l1, l2):
        """The unique common point of two distinct lines (dual cross product)."""
        a = self.normalize(l1)
        b = self.normalize(l2)
        if a == b:
            raise ValueError("identical lines have no unique intersection")
        gf = self.gf
        cross = (
            gf.sub(gf.mul(a[1], b[2]), gf.mul(a[2], b[1])),
            gf.sub(gf.mul(a[2], b[0]), gf.mul(a[0], b[2])),
            gf.sub(gf.mul(a[0], b[1]), gf.mul(a[1], b[0])),
        )
        return self.normalize(cross)


def _bit_indices(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_points(gf: GF) -> list:
    return list(projective_plane(gf).points)


def enumerate_lines(gf: GF) -> list:
    return list(projective_plane(gf).lines)


def intersect(gf: GF, l1, l2):
    return projective_plane(gf).intersect(l1, l2)


class LineFamily:
    """A collection of distinct lines of PG(2, q), order-preserving."""

    def __init__(self, plane: ProjectivePlane, lines):
        self.plane = plane
        normalized = tuple(plane.normalize(l) for l in lines)
        if len(set(normalized)) != len(normalized):
            raise ValueError("family lines must be pairwise distinct")
        self.lines = normalized

    @classmethod
    def from_indices(cls, plane, indices):
        return cls(plane, [plane.lines[i] for i in indices])

    @property
    def size(self) -> int:
        return len(self.lines)

    @cached_property
    def indices(self) -> tuple:
        return tuple(self.plane.line_index[l] for l in self.lines)

    @cached_property
    def masks(self) -> tuple:
        return tuple(self.plane.line_masks[i] for i in self.indices)

    def __iter__(self):
        return iter(self.lines)

    def __repr__(self):
        return f"LineFamily(q={self.plane.q}, size={self.size})"


def intersection_counts(family: LineFamily) -> tuple:
    """t_i = number of distinct points of line i lying on another family line."""
    if family.size == 0:
        return ()
    masks = family.masks
    counts = []
    for i, m in enumerate(masks):
        union = 0
        for j, other in enumerate(masks):
            if j != i:
                union |= other
        counts.append((m & union).bit_count())
    return tuple(counts)


def satisfies_intersection_condition(family: LineFamily, delta: int) -> bool:
    """True iff every line shares at most q - delta of its points with the
    rest of the family (vacuously true for the empty family).
    """
    q = family.plane.q
    if q < delta + 1:
        raise ValueError(f"need q >= delta+1, got q={q}, delta={delta}")
    if family.size == 0:
        return True
    return max(intersection_counts(family)) <= q - delta


def is_sunflower(family: LineFamily) -> bool:
    """True iff one point lies on every family line.  Needs >= 2 lines."""
    if family.size < 2:
        raise ValueError("sunflower-ness is undefined for fewer than 2 lines")
    common = family.masks[0]
    for m in family.masks[1:]:
        common &= m
    return common != 0


def sunflower_family(gf: GF, center=(1, 0, 0)) -> LineFamily:
    """The pencil of all q+1 lines through `center`, in canonical order."""
    plane = projective_plane(gf)
    return LineFamily(plane, plane.lines_through(center))


def incidence_matrix(family: LineFamily) -> np.ndarray:
    """0/1 matrix, rows = family lines (family order), columns = all points
    of the plane in canonical order.
    """
    plane = family.plane
    npts = len(plane.points)
    grid = np.zeros((family.size, npts), dtype=np.uint8)
    for row, mask in enumerate(family.masks):
        for pi in _bit_indices(mask):
            grid[row, pi] = 1
    return grid


@dataclass(eq=False)
class ConstantWeightCode:
    """Binary constant-weight code sliced out of a family's incidence matrix."""
    length: int
    size: int
    weight: int
    min_distance: int
    max_distance: int
    rows: np.ndarray
    kept_columns: tuple


def extract_constant_weight(family: LineFamily, delta: int) -> ConstantWeightCode:
    """Drop delta+1 designated private columns per line from the incidence
    matrix; the remaining rows form an (n', ell, 2(q-delta-1); q-delta)
    constant-weight code.

    Private points are those on no other family line; the lexicographically
    first delta+1 are designated.  Requires the intersection condition and a
    non-concurrent (non-sunflower) family.
    """
    plane = family.plane
    q = plane.q
    if family.size < 2:
        raise ValueError("extraction needs at least 2 lines")
    if is_sunflower(family):
        raise ValueError("extraction is undefined for a sunflower family")
    masks = family.masks
    removed = set()
    for i, m in enumerate(masks):
        union = 0
        for j, other in enumerate(masks):
            if j != i:
                union |= other
        private = sorted(_bit_indices(m & ~union))
        if len(private) < delta + 1:
            raise ConditionNotSatisfiedError(
                f"line {i} has only {len(private)} private points, "
                f"needs {delta + 1}")
        removed.update(private[:delta + 1])
    kept = tuple(p for p in range(len(plane.points)) if p not in removed)
    grid = incidence_matrix(family)[:, kept]
    weights = grid.sum(axis=1)
    if not np.all(weights == q - delta):
        raise AssertionError("row weights deviate from q - delta")
    dists = []
    for i in range(family.size):
        for j in range(i + 1, family.size):
            dists.append(int(np.count_nonzero(grid[i] != grid[j])))
    return ConstantWeightCode(
        length=len(kept), size=family.size, weight=q - delta,
        min_distance=min(dists), max_distance=max(dists),
        rows=grid, kept_columns=kept)


# ---------------------------------------------------------------------------
# Family search
# ---------------------------------------------------------------------------

class _Search:
    def __init__(self, plane, delta, node_limit):
        if plane.q < delta + 1:
            raise ValueError(f"need q >= delta+1, got q={plane.q}, delta={delta}")
        self.plane = plane
        self.cap = plane.q - delta
        self.masks = plane.line_masks
        self.nlines = len(plane.lines)
        self.node_limit = node_limit
        self.nodes = 0
        self.best: list = []

    def _charge(self):
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise SearchLimitExceededError(
                f"search exceeded {self.node_limit} nodes",
                best=LineFamily.from_indices(self.plane, self.best))

    def try_add(self, chosen, covered, union, cand):
        """Covered-point state after adding `cand`, or None if infeasible."""
        self._charge()
        mc = self.masks[cand]
        cov_c = mc & union
        if cov_c.bit_count() > self.cap:
            return None
        new_cov = []
        for idx, cov in zip(chosen, covered):
            merged = cov | (self.masks[idx] & mc)
            if merged.bit_count() > self.cap:
                return None
            new_cov.append(merged)
        new_cov.append(cov_c)
        return new_cov


def _dfs_best(search: _Search, chosen, covered, union, start):
    if len(chosen) > len(search.best):
        search.best = list(chosen)
    for cand in range(start, search.nlines):
        state = search.try_add(chosen, covered, union, cand)
        if state is not None:
            chosen.append(cand)
            _dfs_best(search, chosen, state, union | search.masks[cand], cand + 1)
            chosen.pop()


def search_max_family(gf: GF, delta: int, mode: str = "exhaustive",
                      node_limit: int | None = None) -> LineFamily:
    """Largest-found family satisfying the intersection condition.

    Exhaustive mode fixes the first line (the plane is line-transitive, so
    the maximum size is unaffected) and backtracks over the rest; it is the
    true optimum when it completes.  Greedy mode adds lexicographically
    first feasible lines.  Both are deterministic.
    """
    plane = projective_plane(gf)
    search = _Search(plane, delta, node_limit)
    if mode == "greedy":
        chosen, covered, union = [], [], 0
        for cand in range(search.nlines):
            state = search.try_add(chosen, covered, union, cand)
            if state is not None:
                chosen.append(cand)
                covered = state
                union |= search.masks[cand]
        return LineFamily.from_indices(plane, chosen)
    if mode != "exhaustive":
        raise ValueError(f"unknown search mode {mode!r}")
    search.best = [0]
    state = search.try_add([], [], 0, 0)
    _dfs_best(search, [0], state, search.masks[0], 1)
    return LineFamily.from_indices(plane, search.best)


def enumerate_max_families(gf: GF, delta: int, *, require_non_sunflower=False,
                           node_limit: int | None = None) -> list[LineFamily]:
    """All families of maximum size satisfying the intersection condition,
    optionally restricted to non-concurrent families.

    Unlike `search_max_family` no symmetry reduction is applied, so the
    result really is every maximum family, in lexicographic order.
    """
    plane = projective_plane(gf)
    search = _Search(plane, delta, node_limit)

    def qualifies(chosen):
        if not require_non_sunflower:
            return True
        if len(chosen) < 3:
            return False  # any two lines meet, so size-2 families are concurrent
        common = search.masks[chosen[0]]
        for idx in chosen[1:]:
            common &= search.masks[idx]
        return common == 0

    best_size = 0

    def dfs_size(chosen, covered, union, start):
        nonlocal best_size
        if qualifies(chosen) and len(chosen) > best_size:
            best_size = len(chosen)
        for cand in range(start, search.nlines):
            state = search.try_add(chosen, covered, union, cand)
            if state is not None:
                chosen.append(cand)
                dfs_size(chosen, state, union | search.masks[cand], cand + 1)
                chosen.pop()

    dfs_size([], [], 0, 0)
    if best_size == 0:
        return []

    found = []

    def dfs_collect(chosen, covered, union, start):
        if len(chosen) == best_size:
            if qualifies(chosen):
                found.append(tuple(chosen))
            return
        if len(chosen) + (search.nlines - start) < best_size:
            return
        for cand in range(start, search.nlines):
            state = search.try_add(chosen, covered, union, cand)
            if state is not None:
                chosen.append(cand)
                dfs_collect(chosen, state, union | search.masks[cand], cand + 1)
                chosen.pop()

    dfs_collect([], [], 0, 0)
    return [LineFamily.from_indices(plane, idxs) for idxs in found]
