from itertools import combinations

import numpy as np
import pytest

from lrckit import field_with_order
from lrckit.errors import SearchLimitExceededError
from lrckit.geometry import (LineFamily, enumerate_lines,
                             enumerate_max_families, enumerate_points,
                             extract_constant_weight, incidence_matrix,
                             intersect, intersection_counts, is_sunflower,
                             projective_plane, satisfies_intersection_condition,
                             search_max_family, sunflower_family)


def _plane(q):
    return projective_plane(field_with_order(q))


def test_fano_counts(gf2):
    assert len(enumerate_points(gf2)) == 7
    assert len(enumerate_lines(gf2)) == 7


@pytest.mark.parametrize("q", [2, 3, 4])
def test_plane_axioms(q):
    plane = _plane(q)
    n = q * q + q + 1
    assert len(plane.points) == len(plane.lines) == n
    for mask in plane.line_masks:
        assert mask.bit_count() == q + 1
    for mask in plane.point_line_masks:
        assert mask.bit_count() == q + 1
    for m1, m2 in combinations(plane.line_masks, 2):
        assert (m1 & m2).bit_count() == 1
    # two distinct points lie on exactly one common line
    for p1, p2 in combinations(plane.point_line_masks, 2):
        assert (p1 & p2).bit_count() == 1


def test_points_sorted_and_normalized(gf4):
    pts = enumerate_points(gf4)
    assert pts == sorted(pts)
    for p in pts:
        lead = next(c for c in p if c != 0)
        assert lead == 1


def test_intersect_examples(gf3, gf4):
    assert intersect(gf4, (1, 0, 0), (0, 1, 0)) == (0, 0, 1)
    assert intersect(gf3, (1, 1, 0), (1, 2, 0)) == (0, 0, 1)
    plane = projective_plane(gf4)
    with pytest.raises(ValueError):
        plane.intersect((1, 0, 0), (1, 0, 0))
    # any two pencil lines meet at the center
    fam = sunflower_family(gf4, (1, 0, 0))
    for l1, l2 in combinations(fam.lines, 2):
        assert plane.intersect(l1, l2) == (1, 0, 0)


def test_normalize(gf5):
    plane = projective_plane(gf5)
    assert plane.normalize((2, 4, 0)) == (1, 2, 0)
    with pytest.raises(ValueError):
        plane.normalize((0, 0, 0))


def test_intersection_counts(gf2, gf4):
    plane4 = projective_plane(gf4)
    single = LineFamily(plane4, [(1, 0, 0)])
    assert intersection_counts(single) == (0,)
    for q, gf in ((2, gf2), (4, gf4)):
        fam = sunflower_family(gf)
        assert intersection_counts(fam) == (1,) * (q + 1)
    plane2 = projective_plane(gf2)
    everything = LineFamily(plane2, plane2.lines)
    assert intersection_counts(everything) == (3,) * 7


def test_counts_bounded(gf5):
    plane = projective_plane(gf5)
    rng = np.random.default_rng(5)
    for _ in range(10):
        size = int(rng.integers(2, 8))
        idxs = rng.choice(len(plane.lines), size=size, replace=False)
        fam = LineFamily.from_indices(plane, sorted(int(i) for i in idxs))
        for t in intersection_counts(fam):
            assert t <= min(fam.size - 1, plane.q + 1)


def test_intersection_condition(gf3, gf4):
    fam = sunflower_family(gf4)
    assert satisfies_intersection_condition(fam, 3)
    plane4 = projective_plane(gf4)
    assert satisfies_intersection_condition(LineFamily(plane4, []), 3)
    with pytest.raises(ValueError):
        satisfies_intersection_condition(fam, 4)  # q < delta + 1
    # pencil plus one line missing the center at q = delta + 1 fails
    plane3 = projective_plane(gf3)
    pencil = sunflower_family(gf3, (1, 0, 0))
    extra = next(l for l in plane3.lines
                 if not plane3.incident((1, 0, 0), l))
    fam_bad = LineFamily(plane3, list(pencil.lines) + [extra])
    assert not satisfies_intersection_condition(fam_bad, 2)


def test_is_sunflower(gf4):
    plane = projective_plane(gf4)
    assert is_sunflower(sunflower_family(gf4))
    triangle = LineFamily(plane, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert not is_sunflower(triangle)
    assert not is_sunflower(LineFamily(plane, plane.lines))
    with pytest.raises(ValueError):
        is_sunflower(LineFamily(plane, [(1, 0, 0)]))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_sunflower_family(q):
    gf = field_with_order(q)
    fam = sunflower_family(gf, (1, 0, 0))
    assert fam.size == q + 1
    assert is_sunflower(fam)
    assert intersection_counts(fam) == (1,) * (q + 1)


def test_incidence_matrix(gf4):
    plane = projective_plane(gf4)
    fam = sunflower_family(gf4)
    grid = incidence_matrix(fam)
    assert grid.shape == (5, 21)
    assert np.all(grid.sum(axis=1) == 5)
    col_weights = grid.sum(axis=0)
    center_col = plane.point_index[(1, 0, 0)]
    assert col_weights[center_col] == 5
    mask = np.ones(21, dtype=bool)
    mask[center_col] = False
    assert np.all(col_weights[mask] <= 1)
    # single line
    single = incidence_matrix(LineFamily(plane, [(1, 0, 0)]))
    assert single.sum() == 5
    # column sums over the whole line set equal q+1 by duality
    full = incidence_matrix(LineFamily(plane, plane.lines))
    assert np.all(full.sum(axis=0) == 5)


def test_extract_constant_weight_manual_family(gf5):
    # three concurrent duals plus two more through the first: a
    # 5-line non-concurrent family with every t_i <= 3
    plane = projective_plane(gf5)
    fam = LineFamily(plane, [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (1, 0, 1)])
    assert satisfies_intersection_condition(fam, 2)
    assert not is_sunflower(fam)
    cw = extract_constant_weight(fam, 2)
    assert cw.size == 5
    assert cw.length == 31 - 5 * 3
    assert cw.weight == 3
    assert cw.min_distance == cw.max_distance == 4
    assert np.all(cw.rows.sum(axis=1) == 3)


def test_extract_rejects_sunflower(gf4):
    fam = sunflower_family(gf4)
    with pytest.raises(ValueError):
        extract_constant_weight(fam, 3)


def test_search_examples(gf3, gf4):
    fam = search_max_family(gf4, 3)
    assert fam.size == 5
    assert is_sunflower(fam)
    assert search_max_family(gf3, 2).size == 4
    greedy = search_max_family(gf4, 3, mode="greedy")
    assert greedy.size <= fam.size
    with pytest.raises(ValueError):
        search_max_family(gf4, 3, mode="sideways")


def test_search_node_limit(gf4):
    with pytest.raises(SearchLimitExceededError) as exc:
        search_max_family(gf4, 3, node_limit=3)
    assert exc.value.best is not None


def test_enumerate_max_families(gf3, gf4):
    fams = enumerate_max_families(gf4, 3)
    assert len(fams) == 21 and all(f.size == 5 for f in fams)
    assert all(is_sunflower(f) for f in fams)
    fams3 = enumerate_max_families(gf3, 2)
    assert len(fams3) == 13 and all(f.size == 4 for f in fams3)


def test_non_sunflower_cap(gf4, gf5):
    # no non-concurrent family may exceed floor((q^2+q+1)/(delta+2))
    for gf, delta in ((gf4, 2), (gf5, 2)):
        q = gf.q
        fams = enumerate_max_families(gf, delta, require_non_sunflower=True)
        assert fams
        for fam in fams:
            assert not is_sunflower(fam)
            assert satisfies_intersection_condition(fam, delta)
            assert fam.size <= (q * q + q + 1) // (delta + 2)


def test_family_validation(gf4):
    plane = projective_plane(gf4)
    with pytest.raises(ValueError):
        LineFamily(plane, [(1, 0, 0), (2, 0, 0)])  # same line twice
