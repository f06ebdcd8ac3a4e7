from fractions import Fraction
from itertools import permutations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cp3conf.closed_forms import (ordered_poincare, punctured_pair_poincare,
                                  twice_punctured_poincare, unordered_poincare)
from cp3conf.cohomology import cocycle_poincare
from cp3conf.kriz_model import KrizComplex
from cp3conf.polys import Poly1, T
from cp3conf.presentations import (PRESENTATIONS, TAU, GCPoly, GradedGenerator, GradedPresentation,
                                   cocycle_presentation, elementary_from_power_sums, free_presentation,
                                   generator_element, hilbert, invariant_cocycle_presentation, lift,
                                   monomials, newton_P, orbit_sum_formula, ordered_presentation,
                                   punctured_pair_presentation, twice_punctured_presentation,
                                   unordered_presentation, verify_presentation)

t = T


def power_sums(xs):
    return tuple(sum(Fraction(x) ** i for x in xs) for i in (1, 2, 3))


def test_newton_small_cases():
    assert str(newton_P(1)) == "tau1"
    assert newton_P(0)(1, 2, 3) == 3
    x1, x2, x3 = sympy.symbols("x1 x2 x3")
    tau = [x1 ** i + x2 ** i + x3 ** i for i in (1, 2, 3)]
    expected = tau[0] ** 4 / 6 - tau[0] ** 2 * tau[1] + tau[1] ** 2 / 2 + sympy.Rational(4, 3) * tau[0] * tau[2]
    assert sympy.expand(expected - (x1 ** 4 + x2 ** 4 + x3 ** 4)) == 0
    p4 = newton_P(4)
    assert p4[(4, 0, 0)] == Fraction(1, 6) and p4[(2, 1, 0)] == -1
    assert p4[(0, 2, 0)] == Fraction(1, 2) and p4[(1, 0, 1)] == Fraction(4, 3)
    assert len(p4) == 4
    with pytest.raises(ValueError):
        newton_P(-1)


def test_elementary_symmetric_from_power_sums():
    e1, e2, e3 = elementary_from_power_sums()
    xs = (2, -3, 5)
    ps = power_sums(xs)
    assert (e1(*ps), e2(*ps), e3(*ps)) == (4, -6 - 15 + 10, -30)


@pytest.mark.parametrize("k", range(0, 13))
def test_newton_symbolic(k):
    x = sympy.symbols("x1:4")
    tau = [sum(v ** i for v in x) for i in (1, 2, 3)]
    poly = sum(sympy.Rational(c.numerator, c.denominator) * tau[0] ** a * tau[1] ** b * tau[2] ** cc
               for (a, b, cc), c in newton_P(k).terms().items())
    assert sympy.expand(poly - sum(v ** k for v in x)) == 0
    assert newton_P(k).is_homogeneous((1, 2, 3))


@settings(max_examples=60)
@given(st.lists(st.integers(-6, 6), min_size=3, max_size=3), st.integers(0, 12))
def test_newton_substitution(xs, k):
    assert newton_P(k)(*power_sums(xs)) == sum(Fraction(x) ** k for x in xs)


def brute_orbit_sum(xs, a, b, c):
    return sum(Fraction(xs[p[0]]) ** a * Fraction(xs[p[1]]) ** b * Fraction(xs[p[2]]) ** c
               for p in permutations(range(3)))


@pytest.mark.parametrize("a", range(1, 5))
@pytest.mark.parametrize("b", range(1, 5))
@pytest.mark.parametrize("c", range(0, 5))
def test_orbit_sum_formula(a, b, c):
    for xs in ((1, 2, 3), (-2, 5, 7), (3, 3, -1)):
        assert orbit_sum_formula(a, b, c)(*power_sums(xs)) == brute_orbit_sum(xs, a, b, c)


@pytest.mark.parametrize("a,b,c", [(1, 1, 1), (1, 2, 3), (2, 2, 1), (3, 1, 4)])
def test_single_correction_variant_is_off_by_three_power_sums(a, b, c):
    # a variant carrying -P_{a+b+c} instead of +2 P_{a+b+c} misses by 3 P_{a+b+c}
    P = newton_P
    variant = (P(a) * P(b) * P(c) - (P(a + b) * P(c) + P(a + c) * P(b) + P(a) * P(b + c))
               - P(a + b + c))
    assert orbit_sum_formula(a, b, c) - variant == 3 * P(a + b + c)
    assert not (orbit_sum_formula(a, b, c) - variant).is_zero()


def test_graded_commutative_arithmetic():
    gens = (GradedGenerator.of("a", 2), GradedGenerator.of("u", 3), GradedGenerator.of("v", 5))
    a, u, v = (generator_element(gens, n) for n in "auv")
    assert u * v == -(v * u)
    assert (u * u).is_zero()
    assert a * u == u * a
    assert (a + u) ** 2 == a ** 2 + 2 * a * u
    assert str(2 * a ** 2 - u * v + 1) == "2*a^2 + 1 - u*v"
    assert (a * u * v).degree_set() == {10}
    assert GradedGenerator.of("u", 3).odd and not GradedGenerator.of("a", 2).odd
    with pytest.raises(ValueError):
        GradedGenerator.of("z", 0)
    with pytest.raises(KeyError):
        generator_element(gens, "w")
    with pytest.raises(ValueError):
        GradedPresentation("bad", gens, (a + u,))


def test_monomial_counts():
    gens = (GradedGenerator.of("a", 2), GradedGenerator.of("b", 2), GradedGenerator.of("u", 3))
    assert len(monomials(gens, 4)) == 3
    assert len(monomials(gens, 5)) == 2
    assert monomials(gens, 1) == []


def test_hilbert_small_algebras():
    assert hilbert(free_presentation(), 8) == 1 + t ** 2 + t ** 4 + t ** 6 + t ** 8
    assert hilbert(free_presentation(2, [lambda x: x ** 3]), 10) == 1 + t ** 2 + t ** 4
    assert hilbert(free_presentation(3), 9) == 1 + t ** 3
    assert not verify_presentation(free_presentation(), 1 + t ** 2, 2, 2)
    assert verify_presentation(free_presentation(2, [lambda x: x ** 2]), 1 + t ** 2, 2, 4)


def test_ordered_presentation_small():
    pres = ordered_presentation(2)
    assert [g.degree for g in pres.generators] == [2, 2, 2, 7]
    assert len(pres.relations) == 8
    assert hilbert(pres, 14) == 1 + 3 * t ** 2 + 3 * t ** 4 + t ** 6 + t ** 7 + t ** 9


def test_unordered_presentation_small():
    pres = unordered_presentation(2)
    assert [g.degree for g in pres.generators] == [2, 4, 6, 7]
    assert hilbert(pres, 14) == 1 + t ** 2 + t ** 4 + t ** 7 + t ** 9
    assert len(pres.relations) == 9
    assert pres.relation_degrees()[:3] == [6, 8, 10]
    assert pres.relation_degrees()[6:] == [4, 6, 8]
    # the degree-2m variant has an empty third quadratic at m = 2, which is omitted
    assert len(unordered_presentation(2, literal=True).relations) == 8
    assert "tau1" in pres.describe() and "[deg 7]" not in pres.describe()


def test_literal_quadratics_lose_classes():
    lit = unordered_presentation(2, literal=True)
    assert lit.name.startswith("unordered-literal")
    h = hilbert(lit, 14)
    assert h == 1 + t ** 2 + t ** 7 + t ** 9
    assert h != unordered_poincare(2).at_s1()
    for m in (3, 4):
        assert not verify_presentation(unordered_presentation(m, literal=True),
                                       unordered_poincare(m).at_s1(), 6 * m, 4)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_presentations_reproduce_cohomology(m):
    top, window = 6 * m, 4
    assert verify_presentation(ordered_presentation(m), ordered_poincare(m).at_s1(), top, window)
    assert verify_presentation(unordered_presentation(m), unordered_poincare(m).at_s1(), top, window)
    cocycles = cocycle_poincare(KrizComplex(m)).at_s1()
    assert verify_presentation(cocycle_presentation(m), cocycles, top, window)
    inv = invariant_cocycle_presentation(m)
    # without the quadratics the invariant algebra is strictly larger
    assert not verify_presentation(inv, unordered_poincare(m).at_s1(), top, window)
    assert set(map(str, inv.relations)) <= set(map(str, unordered_presentation(m).relations))


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_fibre_presentations(m):
    assert hilbert(twice_punctured_presentation(m), 4 * m) == twice_punctured_poincare(m)
    assert hilbert(punctured_pair_presentation(m), 6 * m) == punctured_pair_poincare(m)


def test_registry_and_lift():
    assert set(PRESENTATIONS) >= {"ordered", "unordered", "cocycles", "invariant-cocycles"}
    gens = tuple(GradedGenerator.of(n, 2 * (i + 1)) for i, n in enumerate(TAU))
    lifted = lift(newton_P(2), gens, TAU)
    assert lifted == generator_element(gens, "tau2")
    assert isinstance(lifted, GCPoly)
