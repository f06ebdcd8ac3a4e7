"""Counting partitions of an integer into three parts.

Closed forms for ``P_3(k)`` (unrestricted parts) and ``P_{3,<=m}(k)``
(parts bounded by ``m``), a brute-force enumerator that serves as their
oracle, and the multiplicities of the three irreducible S3-modules in the
scalar part of the model.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence


class PartitionTriple(NamedTuple):
    a: int
    b: int
    c: int


class MultiplicityRow(NamedTuple):
    mu3: int
    mu21: int
    mu111: int

    def dimension(self) -> int:
        return self.mu3 + 2 * self.mu21 + self.mu111


class FormulaMismatch(AssertionError):
    """Two closed forms that should agree gave different values."""


def nearest_integer(q) -> int:
    """Round an exact rational to the nearest integer.

    Half-integers are rejected: the counting formulas never produce them,
    so one showing up means a formula was applied outside its range.
    """
    q = Fraction(q)
    lo = q.numerator // q.denominator
    frac = q - lo
    if frac == Fraction(1, 2):
        raise ValueError(f"{q} is a half-integer; nearest integer undefined")
    return lo + 1 if frac > Fraction(1, 2) else lo


def p3(k: int) -> int:
    """Number of triples a >= b >= c >= 0 with a + b + c = k."""
    if k < 0:
        return 0
    return nearest_integer(Fraction((k + 3) ** 2, 12))


def p3_bounded(m: int, k: int) -> int:
    """Number of triples m >= a >= b >= c >= 0 with a + b + c = k.

    Negative ``m`` or ``k`` give 0.  Above ``floor(3m/2)`` the value is
    obtained from the symmetry k <-> 3m - k, so the correction formula is
    only ever used on m+1 <= k <= floor(3m/2).
    """
    if m < 0 or k < 0 or k > 3 * m:
        return 0
    if k <= m:
        return p3(k)
    if k <= (3 * m) // 2:
        return p3(k) - nearest_integer(Fraction((k - m - 1) ** 2, 4)) + m - k
    return p3_bounded(m, 3 * m - k)


def enumerate_p3_bounded(m: int, k: int) -> list[PartitionTriple]:
    out = []
    for c in range(0, min(m, k // 3) + 1):
        for b in range(c, min(m, (k - c) // 2) + 1):
            a = k - b - c
            if b <= a <= m:
                out.append(PartitionTriple(a, b, c))
    return sorted(out)


def r3(k: int) -> int:
    return 1 if k % 3 == 0 else 0


def _ceil_half(n: int) -> int:
    return -((-n) // 2)


def multiplicities(m: int, k: int) -> MultiplicityRow:
    """Multiplicities of V(3), V(2,1), V(1,1,1) in the degree-2k scalar block.

    Valid for 0 <= 2k <= 3m.  Each of mu21 and mu111 has two closed forms;
    both are evaluated and must agree.
    """
    if k < 0 or 2 * k > 3 * m:
        raise ValueError(f"k={k} outside 0 <= 2k <= 3m for m={m}")
    p = p3_bounded(m, k)
    doubled = k // 2 + 1 - max(0, _ceil_half(k - m))
    mu21_a = 2 * p - (doubled + r3(k))
    mu21_b = p + p3_bounded(m - 2, k - 3) - r3(k)
    mu111_a = p - doubled
    mu111_b = p3_bounded(m - 2, k - 3)
    if mu21_a != mu21_b or mu111_a != mu111_b:
        raise FormulaMismatch(
            f"m={m} k={k}: mu21 {mu21_a} vs {mu21_b}, mu111 {mu111_a} vs {mu111_b}")
    row = MultiplicityRow(p, mu21_a, mu111_a)
    if min(row) < 0:
        raise FormulaMismatch(f"negative multiplicity {row} at m={m} k={k}")
    return row


def multiplicities_by_orbits(m: int, k: int) -> MultiplicityRow:
    """Same multiplicities, read off the orbit types of bounded triples.

    A triple with distinct parts spans V(3)+2V(2,1)+V(1,1,1), one with
    exactly two equal parts V(3)+V(2,1), and (a,a,a) spans V(3).
    """
    mu = [0, 0, 0]
    for t in enumerate_p3_bounded(m, k):
        kinds = len(set(t))
        if kinds == 3:
            mu[0] += 1
            mu[1] += 2
            mu[2] += 1
        elif kinds == 2:
            mu[0] += 1
            mu[1] += 1
        else:
            mu[0] += 1
    return MultiplicityRow(*mu)


def is_unimodal(seq: Sequence[int]) -> bool:
    if not seq:
        raise ValueError("empty sequence")
    i = 0
    n = len(seq)
    while i + 1 < n and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < n and seq[i] >= seq[i + 1]:
        i += 1
    return i == n - 1


def is_symmetric(seq: Sequence[int]) -> bool:
    if not seq:
        raise ValueError("empty sequence")
    return list(seq) == list(reversed(seq))


def bounded_sequence(m: int) -> list[int]:
    return [p3_bounded(m, k) for k in range(3 * m + 1)]
