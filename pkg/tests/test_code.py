from itertools import combinations

import numpy as np
import pytest

from lrckit import (LinearCode, StandardFormParts, assemble_standard_form,
                    check_disjoint_locality, distance_at_least,
                    global_parity_count, is_singleton_optimal, min_distance,
                    rank, singleton_distance_bound, sunflower_code)
from lrckit.code import _dependency_distance, _enumeration_distance
from lrckit.errors import BudgetExceededError, DegenerateCodeError, LocalityError

from conftest import random_matrix

HAMMING_74 = [[0, 0, 0, 1, 1, 1, 1],
              [0, 1, 1, 0, 0, 1, 1],
              [1, 0, 1, 0, 1, 0, 1]]


def test_min_distance_examples(gf2):
    assert min_distance(LinearCode(gf2, [[1, 1, 1]])) == 2
    assert min_distance(LinearCode(gf2, HAMMING_74)) == 3


def test_hamming_via_independent_enumeration(gf2):
    # oracle: walk all 16 codewords explicitly
    code = LinearCode(gf2, HAMMING_74)
    gen = code.generator_matrix
    weights = set()
    for msg in range(1, 16):
        bits = [(msg >> i) & 1 for i in range(4)]
        word = np.zeros(7, dtype=np.int64)
        for i, b in enumerate(bits):
            if b:
                word ^= gen[i]
        weights.add(int(np.count_nonzero(word)))
    assert min(weights) == 3 == min_distance(code)


def test_strategies_agree_and_witness(gf2, gf3, gf4):
    rng = np.random.default_rng(99)
    checked = 0
    for gf in (gf2, gf3, gf4):
        while checked == 0 or checked % 5:
            n = int(rng.integers(4, 11))
            m = int(rng.integers(1, n))
            code = LinearCode(gf, random_matrix(rng, gf, m, n))
            if code.k < 1 or code.k > 7:
                continue
            d_enum, w_enum = _enumeration_distance(code)
            d_dep, w_dep = _dependency_distance(code, 10 ** 7)
            assert d_enum == d_dep
            for w, d in ((w_enum, d_enum), (w_dep, d_dep)):
                assert int(np.count_nonzero(w)) == d
                assert code.contains(w)
            checked += 1
        checked += 1


def test_distance_at_least_relations(gf4):
    code = sunflower_code(gf4, 3)
    d = min_distance(code)
    assert d == 8
    assert distance_at_least(code, 1)
    assert distance_at_least(code, d)
    assert not distance_at_least(code, d + 1)
    with pytest.raises(ValueError):
        distance_at_least(code, 0)
    with pytest.raises(ValueError):
        distance_at_least(code, code.n + 2)


def test_degenerate_code_rejected(gf2):
    zero_code = LinearCode(gf2, np.eye(4, dtype=np.int64))
    assert zero_code.k == 0
    with pytest.raises(DegenerateCodeError):
        min_distance(zero_code)
    with pytest.raises(DegenerateCodeError):
        distance_at_least(zero_code, 2)


def test_budget_exhaustion(gf5):
    code = sunflower_code(gf5, 2)  # q^k = 5^9 enumeration, C(18,*) scans
    with pytest.raises(BudgetExceededError):
        min_distance(code, budget=50)


def test_locality_examples(gf4, gf5):
    profile = check_disjoint_locality(sunflower_code(gf4, 3), 2, 3)
    assert profile.ell == 5
    assert profile.groups[0] == (0, 1, 2, 3)
    with pytest.raises(LocalityError) as exc:
        check_disjoint_locality(LinearCode(gf4, np.eye(8, dtype=np.int64)), 2, 3)
    assert exc.value.block == 0 and exc.value.reason == "dimension"
    # a [5, 3, 3] MDS code as a single (r=3, delta=3) group
    nodes = [1, 2, 3, 4, 0]
    mds_h = np.array([[1] * 5, nodes], dtype=np.int64)
    profile = check_disjoint_locality(LinearCode(gf5, mds_h), 3, 3)
    assert profile.ell == 1


def test_locality_reports_first_bad_block(gf4):
    code = sunflower_code(gf4, 3)
    h = code.H.copy()
    h[:, 5] = 0  # kill a column of group 1
    with pytest.raises(LocalityError) as exc:
        check_disjoint_locality(LinearCode(gf4, h), 2, 3)
    assert exc.value.block == 1


def test_group_erasure_recovery(gf3):
    # any delta-1 in-group erasures leave the group code full rank
    code = sunflower_code(gf3, 2)
    profile = check_disjoint_locality(code, 2, 2)
    gen = code.generator_matrix
    for group in profile.groups:
        local = gen[:, list(group)]
        r = rank(code.gf, local)
        for erased in combinations(range(len(group)), profile.delta - 1):
            keep = [c for c in range(len(group)) if c not in erased]
            assert rank(code.gf, local[:, keep]) == r


def test_singleton_examples():
    assert is_singleton_optimal(20, 7, 8, 2, 3)
    assert is_singleton_optimal(12, 5, 6, 2, 2)
    assert not is_singleton_optimal(20, 7, 7, 2, 3)
    assert singleton_distance_bound(10, 4, 4, 2) == 7  # r = k: classical bound


def test_global_parity_count_examples():
    for delta in (2, 3, 4):
        assert global_parity_count(2 * delta + 2, 2, delta) == 3
        assert global_parity_count(2 * delta + 1, 2, delta) == 2
    assert global_parity_count(8, 3, 3) == 3
    # at d = delta + j*(r+delta-1) the count collapses to j * r
    assert global_parity_count(15, 1, 5) == 2  # j=2, r=1
    with pytest.raises(ValueError):
        global_parity_count(1, 2, 3)


def test_assemble_standard_form(gf5):
    # single block, delta = 2, u = 0: H = (1 | Q1)
    parts = StandardFormParts((np.array([[2, 3]]),), (np.zeros((0, 2), dtype=np.int64),), u=0)
    code = assemble_standard_form(parts, gf5, r=2, delta=2)
    assert code.H.tolist() == [[1, 2, 3]]
    # two blocks with u = 3 global rows: 5 x 6
    parts = StandardFormParts(
        (np.array([[1, 2]]), np.array([[3, 4]])),
        (np.arange(6).reshape(3, 2) % 5, np.ones((3, 2), dtype=np.int64)),
        u=3)
    code = assemble_standard_form(parts, gf5, r=2, delta=2)
    assert code.H.shape == (5, 6)
    assert np.all(code.H[2:, 0] == 0) and np.all(code.H[2:, 3] == 0)


def test_assemble_rejects_bad_parts(gf5):
    with pytest.raises(ValueError):
        parts = StandardFormParts((np.array([[0, 3]]),),
                                  (np.zeros((0, 2), dtype=np.int64),), u=0)
        assemble_standard_form(parts, gf5, r=2, delta=2)
    with pytest.raises(ValueError):
        parts = StandardFormParts((np.array([[1, 2, 3]]),),
                                  (np.zeros((0, 2), dtype=np.int64),), u=0)
        assemble_standard_form(parts, gf5, r=2, delta=2)


def test_parity_row_count_consistency_on_constructed_codes(gf3, gf4):
    for gf, delta in ((gf3, 2), (gf4, 2), (gf4, 3)):
        code = sunflower_code(gf, delta)
        ell = code.n // (delta + 1)
        d = min_distance(code)
        assert code.n - code.k == ell * (delta - 1) + global_parity_count(d, 2, delta)
