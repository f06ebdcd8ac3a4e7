import pytest
from hypothesis import given, strategies as st

from cp3conf.closed_forms import (IdentityFailure, c_poly, collinear_poincare, isotypic_poincare,
                                  model_poincare, noncollinear_poincare, ordered_consistency,
                                  ordered_poincare, ordered_poincare_unsimplified, pair_poincare,
                                  punctured_pair_poincare, r_poly, sign_poincare, stable_coeffs,
                                  stable_poly, standard_poincare, total_from_isotypic,
                                  twice_punctured_poincare, unordered_poincare)
from cp3conf.kriz_model import KrizComplex
from cp3conf.partitions import is_symmetric, is_unimodal
from cp3conf.polys import Poly1, Poly2, S, T, T2

t = T


def ev(p: Poly2, q: int, m: int) -> list:
    """Even (q=0) or odd (q=1) Betti numbers as a list over 0..6m."""
    part = p.s_part(q)
    return [part[(d,)] for d in range(q, 6 * m + 1, 2)]


def test_c_and_r():
    assert c_poly(0) == 1 + 0 * t and c_poly(-1).is_zero()
    assert c_poly(3) == 1 + t ** 2 + t ** 4 + t ** 6
    assert r_poly(2, 1 + 0 * t, t ** 2) == c_poly(2)
    assert r_poly(3, 2, 5) == 8 + 20 + 50 + 125


def test_ordered_examples():
    assert ordered_poincare(1) == 1 + S * T2 ** 3
    assert ordered_poincare(2) == 1 + 3 * T2 ** 2 + 3 * T2 ** 4 + T2 ** 6 + S * (T2 ** 7 + T2 ** 9)
    with pytest.raises(ValueError):
        ordered_poincare(0)


@pytest.mark.parametrize("m", range(1, 9))
def test_ordered_simplification(m):
    assert ordered_consistency(m)
    assert ordered_poincare_unsimplified(m) == ordered_poincare(m)


@pytest.mark.parametrize("m", range(1, 6))
def test_model_dimensions(m):
    cx = KrizComplex(m)
    for q in range(3):
        got = Poly2({(k, qq): cx.dim(qq, k) for qq, k in cx.bidegrees() if qq == q})
        assert got == model_poincare(m, q)
    with pytest.raises(ValueError):
        model_poincare(m, 3)


def test_isotypic_printed_small_cases():
    assert unordered_poincare(2) == 1 + T2 ** 2 + T2 ** 4 + S * (T2 ** 7 + T2 ** 9)
    assert unordered_poincare(3) == (1 + T2 ** 2 + 2 * T2 ** 4 + 2 * T2 ** 6 + T2 ** 8
                                     + S * (T2 ** 11 + T2 ** 13 + T2 ** 15))
    assert standard_poincare(2) == 2 * T2 ** 2 + 2 * T2 ** 4
    assert standard_poincare(4) == sum((c * T2 ** (2 * k) for k, c in
                                        zip(range(1, 9), (2, 4, 6, 8, 8, 6, 4, 2))), Poly2())
    assert sign_poincare(2) == T2 ** 6
    assert isotypic_poincare("3", 2) == unordered_poincare(2)
    for f in (unordered_poincare, standard_poincare, sign_poincare):
        with pytest.raises(ValueError):
            f(1)


@pytest.mark.parametrize("m", range(10, 13))
def test_unordered_initial_terms_stable(m):
    assert ev(unordered_poincare(m), 0, m)[:10] == [1, 1, 2, 3, 4, 5, 7, 8, 10, 12]


@pytest.mark.parametrize("m", range(5, 12))
def test_unordered_tail(m):
    even = unordered_poincare(m).s_part(0)
    assert even[(6 * m - 12,)] == 1
    assert all(even[(d,)] == 0 for d in range(6 * m - 10, 6 * m + 1))
    odd = unordered_poincare(m).s_part(1)
    assert odd == Poly1({(d,): 1 for d in range(4 * m - 1, 6 * m - 2, 2)})
    if m >= 6:
        assert even[(6 * m - 14,)] == 1


@pytest.mark.parametrize("m", range(5, 12))
def test_standard_stable_ends(m):
    c = ev(standard_poincare(m), 0, m)
    assert c[1:5] == [2, 4, 6, 10]
    assert c[3 * m - 5:3 * m - 3] == [4, 2] and all(x == 0 for x in c[3 * m - 3:])


@pytest.mark.parametrize("m", range(4, 12))
def test_sign_part_ends(m):
    c = ev(sign_poincare(m), 0, m)
    assert c[:3] == [0, 0, 0] and c[3] == 1 and c[3 * m - 3] == 1
    # the t^8 and t^{6m-8} coefficients are both 1 (one orbit of distinct parts)
    assert c[4] == 1 and c[3 * m - 4] == 1
    assert all(x == 0 for x in c[3 * m - 2:])


@pytest.mark.parametrize("m", range(2, 9))
def test_isotypic_parts_sum_to_total(m):
    assert total_from_isotypic(m) == ordered_poincare(m)


@pytest.mark.parametrize("m", range(2, 11))
def test_unimodality(m):
    for p in (ordered_poincare(m), unordered_poincare(m), standard_poincare(m), sign_poincare(m)):
        for q in (0, 1):
            seq = ev(p, q, m)
            nz = [i for i, x in enumerate(seq) if x]
            if nz:
                assert is_unimodal(seq[nz[0]:nz[-1] + 1])


def test_invariant_even_sequence_not_symmetric():
    seq = ev(unordered_poincare(2), 0, 2)
    assert seq == [1, 1, 1, 0, 0, 0, 0]
    assert not is_symmetric(seq[:3] + [0])
    assert is_symmetric(ev(ordered_poincare(3), 0, 3)[:7])


def test_collinear_and_noncollinear():
    assert collinear_poincare(2) == (1 + t ** 5) * (1 + t ** 2)
    assert noncollinear_poincare(2) == (1 + t ** 2) * (1 + t ** 2 + t ** 4)
    for m in range(2, 9):
        assert collinear_poincare(m) * (1 - t ** 2) == (1 + t ** (2 * m + 1)) * (1 - t ** (2 * m))
        assert noncollinear_poincare(m) * (1 - t ** 2) ** 3 == (
            (1 - t ** (2 * m - 2)) * (1 - t ** (2 * m)) * (1 - t ** (2 * m + 2)))
    with pytest.raises(ValueError):
        collinear_poincare(1)
    assert issubclass(IdentityFailure, AssertionError)


def test_fibre_polynomials():
    assert twice_punctured_poincare(3) == 1 + t ** 2 + t ** 4 + t ** 5
    assert punctured_pair_poincare(2) == 1 + 2 * t ** 2 + t ** 5
    assert punctured_pair_poincare(4) == (1 + 2 * t ** 2 + 3 * t ** 4 + 4 * t ** 6 + 2 * t ** 8
                                          + t ** 10 + t ** 13)
    assert pair_poincare(2) == (1 + t ** 2) * (1 + t ** 2 + t ** 4)


@pytest.mark.parametrize("m", range(2, 8))
def test_fibration_euler_characteristics(m):
    # the ordered space fibres over pairs with fibre CP^m minus two points
    e = lambda p: p(-1)  # noqa: E731
    assert e(ordered_poincare(m).at_s1()) == e(pair_poincare(m)) * e(twice_punctured_poincare(m))


def test_stable_series():
    assert stable_coeffs(1, 6) == [1, 0, 1, 0, 1, 0, 1]
    assert stable_coeffs(3, 8) == [1, 0, 3, 0, 6, 0, 10, 0, 15]
    assert stable_poly(2, 4) == 1 + 2 * t ** 2 + 3 * t ** 4
    with pytest.raises(ValueError):
        stable_coeffs(0, 4)


@given(st.integers(2, 30))
def test_ordered_structure(m):
    p = ordered_poincare(m)
    assert p.at_s1()(1) == m ** 3 + m
    even = ev(p, 0, m)
    top = 3 * (m - 1)
    assert even[:top + 1] == even[:top + 1][::-1]
    assert all(x == 0 for x in even[top + 1:])
    assert p.s_part(2).is_zero()


@given(st.integers(2, 25))
def test_total_betti_count(m):
    assert total_from_isotypic(m).at_s1()(1) == m ** 3 + m
    assert unordered_poincare(m).s_part(1)(1) == m
