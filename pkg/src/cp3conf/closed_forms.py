"""Closed-form Poincare polynomials for configuration spaces of three points in CP^m.

All formulas are built from their summation or product forms; printed
expansions live only in the tests.
"""
from __future__ import annotations

from .partitions import multiplicities, p3_bounded
from .polys import Poly1, Poly2, S, T


class IdentityFailure(AssertionError):
    pass


def r_poly(m: int, x, y):
    """x^m + x^{m-1} y + ... + y^m for any ring elements x, y."""
    total = 0
    for i in range(m + 1):
        total = total + x ** (m - i) * y ** i
    return total


def c_poly(m: int) -> Poly1:
    """1 + t^2 + ... + t^{2m}; zero for m < 0."""
    return Poly1({(2 * i,): 1 for i in range(m + 1)})


def _t2(p: Poly1) -> Poly2:
    return Poly2.from_poly1(p)


def ordered_poincare(m: int) -> Poly2:
    """C_{m-1}(t)^3 + s t^{4m-1} C_{m-1}(t) for F(CP^m, 3)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    c = c_poly(m - 1)
    return _t2(c ** 3) + Poly2.from_poly1(T ** (4 * m - 1) * c, s_power=1)


def ordered_poincare_unsimplified(m: int) -> Poly2:
    """E-dimensions minus boundary corrections, before simplification."""
    c = c_poly(m)
    t = T
    run_a = Poly1({(d,): 1 for d in range(4 * m, 6 * m - 1, 2)})
    run_b = Poly1({(d,): 1 for d in range(4 * m, 6 * m + 1, 2)})
    odd = Poly1({(d,): 1 for d in range(4 * m - 1, 6 * m - 2, 2)})
    even = c ** 3 - (3 * c ** 2 * t ** (2 * m) - run_a - 2 * run_b)
    return _t2(even) + Poly2.from_poly1(odd, s_power=1)


def ordered_consistency(m: int) -> bool:
    return ordered_poincare_unsimplified(m) == ordered_poincare(m)


def _single_middle(m: int):
    """Indices k from floor(3m/2) and ceil(3m/2): the shared one counts once."""
    lo = (3 * m) // 2
    hi = -((-3 * m) // 2)
    return lo, hi


def unordered_poincare(m: int) -> Poly2:
    """Poincare polynomial of C(CP^m, 3) (the invariant part)."""
    if m < 2:
        raise ValueError("formula stated for m >= 2")
    terms: dict = {}

    def put(k, c, s=0):
        if c:
            terms[(2 * k - s, s)] = terms.get((2 * k - s, s), 0) + c

    for k in range(0, m):
        put(k, p3_bounded(m, k))
    for k in range(m, 2 * m):
        put(k, p3_bounded(m, k) + m - k - 1)
    for k in range(2 * m, 3 * m):
        put(k, p3_bounded(m, k) - 3 * m + k)
        put(k, 1, s=1)
    return Poly2(terms)


def standard_poincare(m: int) -> Poly2:
    """Poincare polynomial of the (2,1)-isotypic part, counted with dimension 2."""
    if m < 2:
        raise ValueError("formula stated for m >= 2")

    def mu21(k):
        return multiplicities(m, k).mu21

    lo, hi = _single_middle(m)
    coeffs: dict[int, int] = {}
    for k in range(1, m):
        coeffs[k] = 2 * mu21(k)
    for k in range(m, lo + 1):
        coeffs[k] = 2 * (mu21(k) - k + m - 1)
    for k in range(hi, 2 * m):
        if k in coeffs:
            continue
        coeffs[k] = 2 * (mu21(3 * m - k) - k + m - 1)
    for k in range(2 * m, 3 * m):
        coeffs[k] = 2 * (mu21(3 * m - k) - 3 * m + k)
    return Poly2({(2 * k, 0): c for k, c in coeffs.items() if c})


def sign_poincare(m: int) -> Poly2:
    """Poincare polynomial of the (1,1,1)-isotypic part."""
    if m < 2:
        raise ValueError("formula stated for m >= 2")

    def mu111(k):
        return multiplicities(m, k).mu111

    lo, hi = _single_middle(m)
    coeffs: dict[int, int] = {}
    for k in range(3, lo + 1):
        coeffs[k] = mu111(k)
    for k in range(hi, 3 * m - 2):
        if k in coeffs:
            continue
        coeffs[k] = mu111(3 * m - k)
    return Poly2({(2 * k, 0): c for k, c in coeffs.items() if c})


def isotypic_poincare(lam, m: int) -> Poly2:
    from .symmetry import parse_irrep

    lam = parse_irrep(lam)
    return {(3,): unordered_poincare, (2, 1): standard_poincare,
            (1, 1, 1): sign_poincare}[lam](m)


def _check(cond: bool, what: str) -> None:
    if not cond:
        raise IdentityFailure(what)


def collinear_poincare(m: int) -> Poly1:
    """(1 + t^{2m+1}) C_{m-1}(t); checked against the rational-function form."""
    if m < 2:
        raise ValueError("formula stated for m >= 2")
    p = (1 + T ** (2 * m + 1)) * c_poly(m - 1)
    _check(p * (1 - T ** 2) == (1 + T ** (2 * m + 1)) * (1 - T ** (2 * m)),
           f"collinear rational form fails at m={m}")
    return p


def noncollinear_poincare(m: int) -> Poly1:
    """C_{m-2} C_{m-1} C_m; checked against the rational-function form."""
    if m < 2:
        raise ValueError("formula stated for m >= 2")
    p = c_poly(m - 2) * c_poly(m - 1) * c_poly(m)
    rhs = (1 - T ** (2 * m - 2)) * (1 - T ** (2 * m)) * (1 - T ** (2 * m + 2))
    _check(p * (1 - T ** 2) ** 3 == rhs, f"non-collinear rational form fails at m={m}")
    return p


def twice_punctured_poincare(m: int) -> Poly1:
    """CP^m minus two points: C_{m-1}(t) + t^{2m-1}."""
    return c_poly(m - 1) + T ** (2 * m - 1)


def punctured_pair_poincare(m: int) -> Poly1:
    """Ordered pairs of distinct points in CP^m minus a point.

    1 + 2t^2 + ... + m t^{2m-2} + (m-2) t^{2m} + ... + t^{4m-6} + t^{4m-3}.
    """
    terms = {(2 * j,): j + 1 for j in range(m)}
    for j in range(m, 2 * m - 2):
        terms[(2 * j,)] = 2 * m - 2 - j
    terms[(4 * m - 3,)] = terms.get((4 * m - 3,), 0) + 1
    return Poly1(terms)


def pair_poincare(m: int) -> Poly1:
    """F(CP^m, 2): C_{m-1}(t) C_m(t)."""
    return c_poly(m - 1) * c_poly(m)


def stable_coeffs(n: int, top: int) -> list[int]:
    """Coefficients of (1 + t^2 + t^4 + ...)^n through degree ``top``."""
    if n < 1 or top < 0:
        raise ValueError("need n >= 1 and top >= 0")
    series = Poly1({(2 * i,): 1 for i in range(top // 2 + 1)})
    return (series ** n).truncate(top).coeffs(top)


def stable_poly(n: int, top: int) -> Poly1:
    return Poly1.from_coeffs(stable_coeffs(n, top))


def model_poincare(m: int, q: int) -> Poly2:
    """Poincare polynomial of the exterior-degree-q part of the model:
    a_q C_m(t)^{3-q} (t^{2m-1} s)^q, with (a_0, a_1, a_2) = (1, 3, 2) the
    Betti numbers of the three-strand Arnold algebra."""
    if q not in (0, 1, 2):
        raise ValueError("q must be 0, 1 or 2")
    arnold = (1, 3, 2)[q]
    return Poly2.from_poly1(arnold * c_poly(m) ** (3 - q) * T ** (q * (2 * m - 1)), s_power=q)


def _odd_run(lo: int, hi: int) -> Poly1:
    return Poly1({(d,): 1 for d in range(lo, hi + 1, 2)})


def invariant_cocycle_poincare(m: int) -> Poly2:
    """Cocycles of exterior degree one in the invariant part: s(t^{4m-1} + ... + t^{6m-3})."""
    return Poly2.from_poly1(_odd_run(4 * m - 1, 6 * m - 3), s_power=1)


def standard_cocycle_poincare(m: int) -> Poly2:
    """Same for the (2,1)-part, counted with dimension 2: 2s(t^{4m-1} + ... + t^{6m-1})."""
    return Poly2.from_poly1(2 * _odd_run(4 * m - 1, 6 * m - 1), s_power=1)


def total_from_isotypic(m: int) -> Poly2:
    return unordered_poincare(m) + standard_poincare(m) + sign_poincare(m)


__all__ = [
    "S", "c_poly", "r_poly", "ordered_poincare", "ordered_poincare_unsimplified",
    "ordered_consistency", "unordered_poincare", "standard_poincare", "sign_poincare",
    "isotypic_poincare", "collinear_poincare", "noncollinear_poincare",
    "twice_punctured_poincare", "punctured_pair_poincare", "pair_poincare",
    "stable_coeffs", "stable_poly", "total_from_isotypic", "model_poincare",
    "invariant_cocycle_poincare", "standard_cocycle_poincare",
]
