from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from cp3conf import partitions as pt


def brute_bounded(m, k):
    """Independent count over all ordered triples, divided into orbits by sorting."""
    return len({tuple(sorted(t, reverse=True))
                for t in product(range(min(m, k) + 1), repeat=3) if sum(t) == k})


def test_nearest_integer():
    assert pt.nearest_integer(Fraction(169, 12)) == 14
    assert pt.nearest_integer(0) == 0
    assert pt.nearest_integer(Fraction(27, 12)) == 2
    assert pt.nearest_integer(Fraction(-7, 3)) == -2
    with pytest.raises(ValueError):
        pt.nearest_integer(Fraction(5, 2))


def test_p3_examples():
    assert pt.p3(0) == 1
    assert pt.p3(6) == 7
    assert pt.p3(10) == 14


def test_p3_bounded_examples():
    assert pt.p3_bounded(5, 7) == 6
    assert pt.p3_bounded(4, 6) == 5
    for m in range(8):
        assert pt.p3_bounded(m, 3 * m + 1) == 0
    assert pt.p3_bounded(-1, 0) == 0
    assert pt.p3_bounded(3, -2) == 0


def test_enumeration_examples():
    assert pt.enumerate_p3_bounded(1, 3) == [(1, 1, 1)]
    assert pt.enumerate_p3_bounded(2, 3) == [(1, 1, 1), (2, 1, 0)]
    assert pt.enumerate_p3_bounded(5, 7) == [(3, 2, 2), (3, 3, 1), (4, 2, 1), (4, 3, 0),
                                             (5, 1, 1), (5, 2, 0)]
    assert pt.enumerate_p3_bounded(4, 0) == [(0, 0, 0)]


def test_r3():
    assert [pt.r3(k) for k in (0, 6, 7)] == [1, 1, 0]


def test_multiplicity_examples():
    assert tuple(pt.multiplicities(2, 3)) == (2, 2, 1)
    assert pt.multiplicities(2, 3).dimension() == 7
    for m in range(1, 6):
        assert tuple(pt.multiplicities(m, 0)) == (1, 0, 0)
    assert pt.multiplicities(6, 6).mu111 == 3
    assert tuple(pt.multiplicities(6, 6)) == (7, 9, 3)


def test_multiplicities_reject_out_of_range():
    with pytest.raises(ValueError):
        pt.multiplicities(2, 4)
    with pytest.raises(ValueError):
        pt.multiplicities(2, -1)


def test_unimodal_and_symmetric():
    assert pt.is_unimodal([1, 1, 2, 3, 2, 1, 1]) and pt.is_symmetric([1, 1, 2, 3, 2, 1, 1])
    assert not pt.is_unimodal([1, 2, 1, 2])
    seq = pt.bounded_sequence(4)
    assert seq == [1, 1, 2, 3, 4, 4, 5, 4, 4, 3, 2, 1, 1]
    assert pt.is_unimodal(seq) and pt.is_symmetric(seq)
    with pytest.raises(ValueError):
        pt.is_unimodal([])
    with pytest.raises(ValueError):
        pt.is_symmetric([])


def test_bounded_count_matches_brute_force_everywhere():
    for m in range(21):
        for k in range(61):
            assert pt.p3_bounded(m, k) == len(pt.enumerate_p3_bounded(m, k)) == brute_bounded(m, k)


def test_unbounded_count_monotone():
    vals = [pt.p3(k) for k in range(62)]
    assert all(vals[k] <= vals[k + 1] for k in range(61))
    assert all(vals[k] < vals[k + 1] for k in range(1, 61))


@given(st.integers(0, 20), st.data())
def test_bounded_symmetry(m, data):
    k = data.draw(st.integers(0, 3 * m))
    assert pt.p3_bounded(m, k) == pt.p3_bounded(m, 3 * m - k)


@given(st.integers(0, 20))
def test_bounded_sequence_shape(m):
    seq = pt.bounded_sequence(m)
    assert pt.is_unimodal(seq) and pt.is_symmetric(seq)
    assert seq[(3 * m) // 2] == max(seq)


@given(st.integers(1, 20), st.data())
def test_multiplicity_forms_agree_with_orbits(m, data):
    k = data.draw(st.integers(0, 3 * m // 2))
    row = pt.multiplicities(m, k)
    assert row == pt.multiplicities_by_orbits(m, k)
    assert min(row) >= 0
    ordered = sum(1 for t in product(range(m + 1), repeat=3) if sum(t) == k)
    assert row.dimension() == ordered
