"""Turn qualifying line families of PG(2, q) into optimal locality-2 codes,
including the pencil (sunflower) construction, and certify optimality
end to end.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .bounds import global_parity_count, singleton_distance_bound
from .code import (DEFAULT_BUDGET, LinearCode, StandardFormParts,
                   assemble_standard_form, check_disjoint_locality,
                   min_distance_with_witness)
from .errors import (ConditionNotSatisfiedError, InfeasibleParametersError,
                     LocalityError, LrcError)
from .gf import GF
from .geometry import (LineFamily, satisfies_intersection_condition,
                       sunflower_family)


@dataclass(frozen=True)
class GroupGeometry:
    """Per-group data: the line, a basis (u, v) of its 2-subspace, and the
    coefficient pairs expressing the remaining delta-1 chosen points as
    a_m * u + b_m * v (both coefficients nonzero).
    """
    line: tuple
    u_vec: tuple
    v_vec: tuple
    coeffs: tuple


def select_group_geometry(family: LineFamily, index: int, delta: int) -> GroupGeometry:
    """Deterministically pick delta+1 points of line `index` lying on no
    other family line (lexicographically first), and express all but the
    first two in the basis they define.
    """
    plane = family.plane
    gf = plane.gf
    masks = family.masks
    union = 0
    for j, m in enumerate(masks):
        if j != index:
            union |= m
    free_mask = masks[index] & ~union
    free = [plane.points[i] for i in sorted(_bits(free_mask))]
    if len(free) < delta + 1:
        raise ConditionNotSatisfiedError(
            f"line {index} has {len(free)} free points, needs {delta + 1}")
    chosen = free[:delta + 1]
    u_vec, v_vec = chosen[0], chosen[1]
    basis = np.column_stack([u_vec, v_vec])
    coeffs = []
    for w_vec in chosen[2:]:
        sol = linalg.solve(gf, basis, np.array(w_vec, dtype=np.int64))
        if sol is None:
            raise LrcError("free point not in the span of its own line")
        a, b = int(sol[0]), int(sol[1])
        if a == 0 or b == 0:
            raise LrcError("distinct free point produced a zero coefficient")
        coeffs.append((a, b))
    return GroupGeometry(line=family.lines[index], u_vec=u_vec, v_vec=v_vec,
                         coeffs=tuple(coeffs))


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mds_column_pair(gf: GF, coeffs) -> tuple[np.ndarray, np.ndarray]:
    """Canonical nonzero columns (p, q) with a_m * p_m + b_m * q_m = 0:
    p_m = b_m and q_m = -a_m.  Any nonzero scalar multiple would do.
    """
    p_col = np.zeros(len(coeffs), dtype=np.int64)
    q_col = np.zeros(len(coeffs), dtype=np.int64)
    for m, (a, b) in enumerate(coeffs):
        if a == 0 or b == 0:
            raise ValueError("coefficients must be nonzero")
        p_col[m] = b
        q_col[m] = gf.neg(a)
    return p_col, q_col


def family_to_code(family: LineFamily, delta: int) -> LinearCode:
    """Parity-check matrix of the optimal (r=2, delta) code attached to a
    family satisfying the intersection condition: per group the top rows are
    (I_{delta-1} | p_i | q_i), the three global parity rows hold (0 | u_i | v_i).

    The resulting parameters are n = (delta+1)*ell, k = 2*ell - 3,
    d = 2*delta + 2.
    """
    plane = family.plane
    gf = plane.gf
    if plane.q < delta + 1:
        raise ValueError(f"need q >= delta+1, got q={plane.q}, delta={delta}")
    if not satisfies_intersection_condition(family, delta):
        raise ConditionNotSatisfiedError(
            "family violates the intersection condition")
    ell = family.size
    if ell < 2:
        raise ValueError("need at least 2 lines to build a code")
    q_blocks = []
    v_blocks = []
    for i in range(ell):
        geo = select_group_geometry(family, i, delta)
        p_col, q_col = mds_column_pair(gf, geo.coeffs)
        q_blocks.append(np.column_stack([p_col, q_col]))
        v_blocks.append(np.column_stack([geo.u_vec, geo.v_vec]))
    parts = StandardFormParts(tuple(q_blocks), tuple(v_blocks), u=3)
    code = assemble_standard_form(parts, gf, r=2, delta=delta)
    if code.k != 2 * ell - 3:
        raise LrcError(f"assembled rank is off: k={code.k}, expected {2 * ell - 3}")
    return code


def sunflower_code(gf: GF, delta: int) -> LinearCode:
    """The pencil construction: all q+1 lines through (1, 0, 0) yield an
    optimal (n=(delta+1)(q+1), k=2q-1, d=2*delta+2; r=2, delta) code.
    Requires q >= delta + 1.
    """
    if gf.q < delta + 1:
        raise ValueError(f"need q >= delta+1, got q={gf.q}, delta={delta}")
    return family_to_code(sunflower_family(gf), delta)


@dataclass
class Certificate:
    """Outcome of an end-to-end optimality verification."""
    n: int
    k: int
    r: int
    delta: int
    ell: int | None = None
    u: int | None = None
    d: int | None = None
    d_method: str | None = None
    witness: list | None = None
    optimal: bool = False
    failed_stage: str | None = None
    detail: str = ""
    stage_times_ms: dict = field(default_factory=dict)

    def to_json_dict(self, include_timing: bool = True) -> dict:
        out = {
            "n": self.n, "k": self.k, "d": self.d, "r": self.r,
            "delta": self.delta, "ell": self.ell, "u": self.u,
            "optimal": self.optimal, "d_method": self.d_method,
            "witness": self.witness, "failed_stage": self.failed_stage,
            "detail": self.detail,
        }
        if include_timing:
            out["stage_times_ms"] = self.stage_times_ms
        return out


def certify_optimal(code: LinearCode, r: int, delta: int,
                    budget: int = DEFAULT_BUDGET) -> Certificate:
    """Run the full optimality pipeline: disjoint locality, exact minimum
    distance (enumeration or column-dependency search, whichever fits the
    budget), Singleton equality, and the parity-row count consistency check.

    Never raises on a merely non-optimal code; the certificate carries the
    first failed stage instead.  Budget exhaustion still raises.
    """
    cert = Certificate(n=code.n, k=code.k, r=r, delta=delta)
    width = r + delta - 1

    t0 = time.perf_counter()
    if code.n % width:
        cert.failed_stage = "structure"
        cert.detail = f"group width {width} does not divide n={code.n}"
        return cert
    cert.ell = code.n // width
    if code.k < 1:
        cert.failed_stage = "structure"
        cert.detail = "code dimension is zero"
        return cert
    cert.u = code.n - code.k - cert.ell * (delta - 1)
    cert.stage_times_ms["structure"] = _ms(t0)

    t0 = time.perf_counter()
    try:
        check_disjoint_locality(code, r, delta, budget)
    except LocalityError as exc:
        cert.failed_stage = "locality"
        cert.detail = str(exc)
        cert.stage_times_ms["locality"] = _ms(t0)
        return cert
    cert.stage_times_ms["locality"] = _ms(t0)

    t0 = time.perf_counter()
    d, witness, method = min_distance_with_witness(code, budget)
    cert.d = d
    cert.d_method = method
    cert.witness = [int(c) for c in witness]
    cert.stage_times_ms["distance"] = _ms(t0)

    t0 = time.perf_counter()
    target = singleton_distance_bound(code.n, code.k, r, delta)
    if d != target:
        cert.failed_stage = "distance"
        cert.detail = f"d={d} but the Singleton-type bound gives {target}"
        cert.stage_times_ms["singleton"] = _ms(t0)
        return cert
    try:
        expected_u = global_parity_count(d, r, delta)
    except (ValueError, InfeasibleParametersError) as exc:
        cert.failed_stage = "singleton"
        cert.detail = str(exc)
        cert.stage_times_ms["singleton"] = _ms(t0)
        return cert
    if cert.u != expected_u:
        cert.failed_stage = "singleton"
        cert.detail = f"u={cert.u} but optimality forces {expected_u}"
        cert.stage_times_ms["singleton"] = _ms(t0)
        return cert
    cert.stage_times_ms["singleton"] = _ms(t0)
    cert.optimal = True
    return cert


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000.0, 3)
