"""Closed-form length bounds for Singleton-optimal (r, delta) LRCs.

Everything is exact integer arithmetic; floors of expressions containing
square roots are computed with `math.isqrt`, never floating point, because
several values sit right at integer boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, isqrt

from .errors import InfeasibleParametersError


def singleton_distance_bound(n: int, k: int, r: int, delta: int) -> int:
    """Largest minimum distance allowed for an (r, delta) LRC of given [n, k]."""
    if k < 1 or r < 1 or delta < 2:
        raise ValueError("need k >= 1, r >= 1, delta >= 2")
    return n - k + 1 - (-(-k // r) - 1) * (delta - 1)


def is_singleton_optimal(n: int, k: int, d: int, r: int, delta: int) -> bool:
    """True iff d meets the generalized Singleton-type bound with equality."""
    return d == singleton_distance_bound(n, k, r, delta)


def global_parity_count(d: int, r: int, delta: int) -> int:
    """Number u of global parity rows under the locality blocks of an
    optimal code: u = d - 1 - (floor((d - delta)/(r + delta - 1)) + 1)(delta - 1).
    """
    if d < delta:
        raise ValueError(f"need d >= delta, got d={d}, delta={delta}")
    u = d - 1 - ((d - delta) // (r + delta - 1) + 1) * (delta - 1)
    if u < 0:
        raise InfeasibleParametersError(
            f"global parity count is negative for d={d}, r={r}, delta={delta}")
    return u


def max_group_count(q: int, u: int, r: int, delta: int) -> int:
    """Cap on the number of disjoint repair groups when d >= 2*delta + 1.

    Each group turns every choice of delta columns of its local MDS block
    into a distinct projective direction in the u global parity rows, so
    ell * C(r+delta-1, delta) <= (q^u - 1)/(q - 1).
    """
    if u < 1:
        raise ValueError(f"need u >= 1, got {u}")
    return (q ** u - 1) // ((q - 1) * comb(r + delta - 1, delta))


_DISTANCE_CASES = ("2*delta+1", "2*delta+2", "3*delta")


def _allowed_distances(delta: int) -> tuple[int, int, int]:
    return (2 * delta + 1, 2 * delta + 2, 3 * delta)


def subspace_count_length_bound(q: int, r: int, delta: int, d: int) -> int:
    """Length cap from projective (1-subspace) counting in the parity rows.

    Valid for d in {2*delta+1, 2*delta+2, 3*delta}; equals
    (r+delta-1) * max_group_count(q, u, r, delta) with u from
    global_parity_count.
    """
    if d not in _allowed_distances(delta):
        raise ValueError(f"d must be one of {_DISTANCE_CASES} for delta={delta}")
    u = global_parity_count(d, r, delta)
    if u < 1:
        raise InfeasibleParametersError(f"u={u} < 1: bound undefined")
    return (r + delta - 1) * max_group_count(q, u, r, delta)


def vector_count_length_bound(q: int, r: int, delta: int, d: int) -> int:
    """The older length cap (r+delta-1) * floor(q^u / (r(q-1))),
    valid for 2*delta+1 <= d <= 3*delta.  Counts raw vectors instead of
    projective directions, so it is never tighter than the subspace bound.
    """
    if not 2 * delta + 1 <= d <= 3 * delta:
        raise ValueError(f"d must satisfy 2*delta+1 <= d <= 3*delta, got {d}")
    u = global_parity_count(d, r, delta)
    return (r + delta - 1) * (q ** u // (r * (q - 1)))


def r2_length_bound(q: int, delta: int, d: int) -> int:
    """Closed forms of the subspace bound at locality r = 2.

    d = 2*delta+1 gives n <= q+1; d = 2*delta+2 gives
    n <= (delta+1) * floor((q^2+q+1)/(delta+1)).
    """
    if d == 2 * delta + 1:
        return q + 1
    if d == 2 * delta + 2:
        return (delta + 1) * ((q * q + q + 1) // (delta + 1))
    raise ValueError(f"d must be 2*delta+1 or 2*delta+2, got {d}")


def incidence_length_bound(q: int, delta: int) -> int:
    """Length cap for r = 2, d = 2*delta+2 from line-family counting:
    a family is either a pencil (length (delta+1)(q+1)) or obeys the
    non-concurrent cap (delta+1) * floor((q^2+q+1)/(delta+2)).
    """
    if q < delta + 1:
        raise ValueError(f"need q >= delta+1, got q={q}, delta={delta}")
    return max((delta + 1) * (q + 1),
               (delta + 1) * ((q * q + q + 1) // (delta + 2)))


def _floor_minus_sqrt(a: int, radicand: int, b: int) -> int:
    """floor((a - sqrt(radicand)) / b) for nonnegative integers, exactly."""
    s = isqrt(radicand)
    ceil_sqrt = s if s * s == radicand else s + 1
    return (a - ceil_sqrt) // b


def _floor_plus_sqrt(a: int, mult: int, radicand: int, b: int) -> int:
    """floor((a + mult * sqrt(radicand)) / b) exactly."""
    return (a + isqrt(mult * mult * radicand)) // b


def johnson_discriminant(q: int, delta: int) -> int:
    """Discriminant of the quadratic behind the first Johnson-based bound."""
    return ((4 * delta + 5) * q ** 4
            - (8 * delta ** 2 + 12 * delta + 2) * q ** 3
            + (4 * delta ** 3 + 6 * delta ** 2 - 1) * q ** 2
            - 2 * (delta + 1) ** 2 * q
            + (delta + 1) ** 4)


def johnson_length_bounds(q: int, delta: int) -> tuple[int, int]:
    """Two length caps for r = 2, d = 2*delta+2 derived from the Johnson
    bounds on the constant-weight code cut out of a non-concurrent family.

    Requires q >= delta + 2.  The second bound grows like q^1.5 versus q^2
    for the first.  Floors of the irrational expressions are computed by
    exact integer comparison.
    """
    if q < delta + 2:
        raise ValueError(f"need q >= delta+2, got q={q}, delta={delta}")
    gamma = johnson_discriminant(q, delta)
    if gamma < 0:
        raise InfeasibleParametersError("negative discriminant: parameter misuse")
    a16 = (2 * delta + 3) * q * q + q + (delta + 1) ** 2
    bound_a = (delta + 1) * _floor_minus_sqrt(a16, gamma, 2 * (delta + 1) ** 2)
    rad = 4 * (delta + 1) * q - (3 * delta ** 2 + 4 * delta)
    if rad < 0:
        raise InfeasibleParametersError("negative radicand: parameter misuse")
    a17 = delta * (q + 2) + 2
    bound_b = (delta + 1) * _floor_plus_sqrt(a17, q, rad, 2 * (delta + 1))
    return bound_a, bound_b


def johnson_constant_weight_bound(n: int, half_distance: int, w: int):
    """Johnson bounds on the size of a binary (n, M, d = 2*half_distance; w)
    constant-weight code.

    Returns (bound_a, bound_b); bound_b is None when the second inequality
    carries no information (w^2 - w*n + half_distance*n <= 0).
    """
    if not n >= w >= half_distance >= 1:
        raise ValueError("need n >= w >= half_distance >= 1")
    bound_a = comb(n, w - half_distance + 1) // comb(w, w - half_distance + 1)
    denom = w * w - w * n + half_distance * n
    bound_b = half_distance * n // denom if denom > 0 else None
    return bound_a, bound_b


# ---------------------------------------------------------------------------
# Combined report
# ---------------------------------------------------------------------------

BOUND_NAMES = ("subspace_count", "vector_count", "r2_closed_form",
               "incidence", "johnson_a", "johnson_b")

TSV_COLUMNS = ("q", "r", "delta", "d", "u") + BOUND_NAMES + ("best",)


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: int | None
    applicable: bool
    note: str = ""


@dataclass(frozen=True)
class BoundReport:
    """Every applicable length bound for one (q, r, delta, d) point."""
    q: int
    r: int
    delta: int
    d: int
    u: int | None
    entries: tuple[BoundEntry, ...] = field(default_factory=tuple)

    @property
    def best(self) -> int:
        return min(e.value for e in self.entries if e.applicable)

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def value(self, name: str):
        e = self.entry(name)
        return e.value if e.applicable else None

    def to_tsv_row(self) -> str:
        cells = [self.q, self.r, self.delta, self.d,
                 self.u if self.u is not None else "-"]
        for name in BOUND_NAMES:
            v = self.value(name)
            cells.append(v if v is not None else "-")
        cells.append(self.best)
        return "\t".join(str(c) for c in cells)

    def to_table(self) -> str:
        lines = [f"q={self.q} r={self.r} delta={self.delta} d={self.d} "
                 f"u={self.u if self.u is not None else '-'}"]
        for e in self.entries:
            if e.applicable:
                lines.append(f"  {e.name:<16} {e.value}")
            else:
                lines.append(f"  {e.name:<16} -    ({e.note})")
        lines.append(f"  {'best':<16} {self.best}")
        return "\n".join(lines)


def bounds_report(q: int, r: int, delta: int, d: int) -> BoundReport:
    """Evaluate every bound that applies at (q, r, delta, d).

    Inapplicable bounds are flagged absent rather than reported as zero.
    For d = 2*delta+1 at r = 2 the report deliberately exposes both the
    q+1 closed form and the tighter (delta+1)*floor((q+1)/(delta+1))
    subspace-count value; they differ unless (delta+1) divides q+1.
    Raises if no bound applies at all.
    """
    if q < 2 or r < 1 or delta < 2 or d < 1:
        raise ValueError("parameters out of range")
    try:
        u = global_parity_count(d, r, delta)
    except (ValueError, InfeasibleParametersError):
        u = None

    entries = []

    def attempt(name, func, *args, requires=""):
        try:
            entries.append(BoundEntry(name, int(func(*args)), True))
        except (ValueError, InfeasibleParametersError) as exc:
            entries.append(BoundEntry(name, None, False, requires or str(exc)))

    attempt("subspace_count", subspace_count_length_bound, q, r, delta, d,
            requires="requires d in {2*delta+1, 2*delta+2, 3*delta} and u >= 1")
    attempt("vector_count", vector_count_length_bound, q, r, delta, d,
            requires="requires 2*delta+1 <= d <= 3*delta")
    if r == 2:
        attempt("r2_closed_form", r2_length_bound, q, delta, d,
                requires="requires d in {2*delta+1, 2*delta+2}")
        if d == 2 * delta + 2:
            attempt("incidence", incidence_length_bound, q, delta,
                    requires="requires q >= delta+1")
            if q >= delta + 2:
                try:
                    ja, jb = johnson_length_bounds(q, delta)
                    entries.append(BoundEntry("johnson_a", ja, True))
                    entries.append(BoundEntry("johnson_b", jb, True))
                except (ValueError, InfeasibleParametersError) as exc:
                    entries.append(BoundEntry("johnson_a", None, False, str(exc)))
                    entries.append(BoundEntry("johnson_b", None, False, str(exc)))
            else:
                entries.append(BoundEntry("johnson_a", None, False, "requires q >= delta+2"))
                entries.append(BoundEntry("johnson_b", None, False, "requires q >= delta+2"))
        else:
            note = "requires d = 2*delta+2"
            entries.append(BoundEntry("incidence", None, False, note))
            entries.append(BoundEntry("johnson_a", None, False, note))
            entries.append(BoundEntry("johnson_b", None, False, note))
    else:
        note = "requires r = 2"
        entries.append(BoundEntry("r2_closed_form", None, False, note))
        entries.append(BoundEntry("incidence", None, False, note))
        entries.append(BoundEntry("johnson_a", None, False, note))
        entries.append(BoundEntry("johnson_b", None, False, note))

    report = BoundReport(q, r, delta, d, u, tuple(entries))
    if not any(e.applicable for e in entries):
        raise ValueError(f"no bound applies at q={q}, r={r}, delta={delta}, d={d}")
    return report
