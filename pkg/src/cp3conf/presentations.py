"""Finitely presented graded-commutative algebras and their Hilbert series.

Even generators commute; odd generators anticommute and square to zero,
so a monomial is an exponent vector on the even generators times a sorted
set of odd generators.  The Hilbert series is computed degree by degree
as (number of monomials) - rank(span of monomial * relation).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence

from .exact_linalg import SparseMatrixQ, rank
from .polys import Poly, Poly1

TAU = ("tau1", "tau2", "tau3")


class GradedGenerator(NamedTuple):
    name: str
    degree: int
    parity: str  # "even" | "odd"

    @classmethod
    def of(cls, name: str, degree: int) -> "GradedGenerator":
        if degree <= 0:
            raise ValueError("generator degrees are positive")
        return cls(name, degree, "odd" if degree % 2 else "even")

    @property
    def odd(self) -> bool:
        return self.parity == "odd"


class GCPoly:
    """Element of the free graded-commutative algebra on ``gens``.

    Keys are ``(even_exps, odd_indices)`` with ``odd_indices`` a sorted tuple
    of positions among the odd generators.
    """

    __slots__ = ("gens", "terms")

    def __init__(self, gens: Sequence[GradedGenerator], terms: Mapping = ()):
        self.gens = tuple(gens)
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.terms = {k: Fraction(v) for k, v in items if v}

    @property
    def even(self) -> list[GradedGenerator]:
        return [g for g in self.gens if not g.odd]

    @property
    def odd(self) -> list[GradedGenerator]:
        return [g for g in self.gens if g.odd]

    def _zero_key(self):
        return ((0,) * len(self.even), ())

    def _coerce(self, other) -> "GCPoly":
        if isinstance(other, GCPoly):
            return other
        return GCPoly(self.gens, {self._zero_key(): other})

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return GCPoly(self.gens, acc)

    __radd__ = __add__

    def __neg__(self):
        return GCPoly(self.gens, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GCPoly):
            return GCPoly(self.gens, {k: v * other for k, v in self.terms.items()})
        acc: dict = {}
        for (e1, o1), c1 in self.terms.items():
            for (e2, o2), c2 in other.terms.items():
                key, sign = mono_mul(e1, o1, e2, o2)
                if sign:
                    acc[key] = acc.get(key, 0) + sign * c1 * c2
        return GCPoly(self.gens, acc)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        out = GCPoly(self.gens, {self._zero_key(): 1})
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, GCPoly):
            other = self._coerce(other)
        return self.gens == other.gens and self.terms == other.terms

    def degree_set(self) -> set[int]:
        ev, od = self.even, self.odd
        return {sum(a * g.degree for a, g in zip(e, ev)) + sum(od[i].degree for i in o)
                for e, o in self.terms}

    def sorted_terms(self):
        # graded reverse order on even exponents, then odd part
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], tuple(-x for x in kv[0][0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ev, od = self.even, self.odd
        parts = []
        for (e, o), c in self.sorted_terms():
            mono = [g.name if a == 1 else f"{g.name}^{a}" for a, g in zip(e, ev) if a]
            mono += [od[i].name for i in o]
            body = "*".join(mono)
            if not body:
                body = str(abs(c))
            elif abs(c) != 1:
                body = f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


def mono_mul(e1, o1, e2, o2):
    """Product of two monomials: (key, sign); sign 0 when an odd generator repeats."""
    if set(o1) & set(o2):
        return None, 0
    merged = list(o1) + list(o2)
    inversions = sum(1 for a in range(len(merged)) for b in range(a + 1, len(merged))
                     if merged[a] > merged[b])
    e = tuple(x + y for x, y in zip(e1, e2))
    return (e, tuple(sorted(merged))), (-1 if inversions % 2 else 1)


@dataclass(frozen=True)
class GradedPresentation:
    name: str
    generators: tuple
    relations: tuple

    def __post_init__(self):
        for r in self.relations:
            if len(r.degree_set()) > 1:
                raise ValueError(f"relation {r} is not homogeneous")

    def gen(self, name: str) -> GCPoly:
        return generator_element(self.generators, name)

    def relation_degrees(self) -> list[int]:
        return [next(iter(r.degree_set())) for r in self.relations]

    def describe(self) -> str:
        gens = ", ".join(f"{g.name} (deg {g.degree}, {g.parity})" for g in self.generators)
        lines = [f"{self.name}", f"  generators: {gens}", "  relations:"]
        for r, d in zip(self.relations, self.relation_degrees()):
            lines.append(f"    [deg {d}] {r}")
        return "\n".join(lines)


def generator_element(gens: Sequence[GradedGenerator], name: str) -> GCPoly:
    gens = tuple(gens)
    ev = [g for g in gens if not g.odd]
    od = [g for g in gens if g.odd]
    for i, g in enumerate(ev):
        if g.name == name:
            e = [0] * len(ev)
            e[i] = 1
            return GCPoly(gens, {(tuple(e), ()): 1})
    for i, g in enumerate(od):
        if g.name == name:
            return GCPoly(gens, {((0,) * len(ev), (i,)): 1})
    raise KeyError(name)


def _weighted_vectors(weights: tuple[int, ...], d: int):
    if not weights:
        if d == 0:
            yield ()
        return
    w, rest = weights[0], weights[1:]
    for a in range(d // w + 1):
        for tail in _weighted_vectors(rest, d - a * w):
            yield (a,) + tail


@lru_cache(maxsize=None)
def _monomials(gens: tuple, d: int) -> tuple:
    ev = tuple(g.degree for g in gens if not g.odd)
    od = [g.degree for g in gens if g.odd]
    out = []
    for size in range(len(od) + 1):
        for sub in combinations(range(len(od)), size):
            rest = d - sum(od[i] for i in sub)
            if rest < 0:
                continue
            for e in _weighted_vectors(ev, rest):
                out.append((e, sub))
    return tuple(sorted(out))


def monomials(gens: Sequence[GradedGenerator], d: int) -> list:
    return list(_monomials(tuple(gens), d))


def hilbert(pres: GradedPresentation, top: int) -> Poly1:
    """Hilbert series of ``pres`` truncated at degree ``top``."""
    gens = tuple(pres.generators)
    rel_deg = pres.relation_degrees()
    coeffs = {}
    for d in range(top + 1):
        monos = monomials(gens, d)
        if not monos:
            continue
        index = {mono: i for i, mono in enumerate(monos)}
        rows = []
        for r, dr in zip(pres.relations, rel_deg):
            if dr > d:
                continue
            for e, o in monomials(gens, d - dr):
                row = {}
                for (re, ro), c in r.terms.items():
                    key, sign = mono_mul(e, o, re, ro)
                    if sign:
                        j = index[key]
                        row[j] = row.get(j, 0) + sign * c
                row = {j: v for j, v in row.items() if v}
                if row:
                    rows.append(row)
        span = rank(SparseMatrixQ(len(rows), len(monos),
                                  {(i, j): v for i, row in enumerate(rows) for j, v in row.items()}))
        if len(monos) - span:
            coeffs[(d,)] = len(monos) - span
    return Poly1(coeffs)


def verify_presentation(pres: GradedPresentation, expected: Poly1, top: int, window: int) -> bool:
    """True iff the Hilbert series equals ``expected`` through ``top`` and
    vanishes on (top, top + window]."""
    h = hilbert(pres, top + window)
    if h.truncate(top) != expected.truncate(top):
        return False
    return all(h[d] == 0 for d in range(top + 1, top + window + 1))


# --- Newton polynomials ----------------------------------------------------

def _tau(i: int) -> Poly:
    return Poly.var(i, TAU)


def elementary_from_power_sums() -> tuple[Poly, Poly, Poly]:
    t1, t2, t3 = _tau(0), _tau(1), _tau(2)
    e1 = t1
    e2 = Fraction(1, 2) * (t1 ** 2 - t2)
    e3 = Fraction(1, 6) * t1 ** 3 - Fraction(1, 2) * t1 * t2 + Fraction(1, 3) * t3
    return e1, e2, e3


@lru_cache(maxsize=None)
def newton_P(k: int) -> Poly:
    """The polynomial P_k with X1^k + X2^k + X3^k = P_k(T1, T2, T3), T_i the power sums."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return Poly.const(3, TAU)
    if k <= 3:
        return _tau(k - 1)
    e1, e2, e3 = elementary_from_power_sums()
    return e1 * newton_P(k - 1) - e2 * newton_P(k - 2) + e3 * newton_P(k - 3)


def orbit_sum_formula(a: int, b: int, c: int) -> Poly:
    """sum over S3 of X^(a,b,c), expressed through P_k (a, b, c >= 1 or c = 0)."""
    P = newton_P
    if c == 0:
        return P(a) * P(b) - P(a + b)
    return (P(a) * P(b) * P(c)
            - (P(a + b) * P(c) + P(a + c) * P(b) + P(a) * P(b + c))
            + 2 * P(a + b + c))


def lift(poly: Poly, gens: Sequence[GradedGenerator], names: Sequence[str]) -> GCPoly:
    """Substitute even generators ``names`` (in order) for the variables of ``poly``."""
    vals = [generator_element(gens, n) for n in names]
    total = GCPoly(gens)
    for exps, c in poly.terms().items():
        term = GCPoly(gens, {((0,) * len([g for g in gens if not g.odd]), ()): c})
        for v, e in zip(vals, exps):
            if e:
                term = term * v ** e
        total = total + term
    return total


# --- the presentations -----------------------------------------------------

def ordered_presentation(m: int) -> GradedPresentation:
    """H^*(F(CP^m,3)): <a1,a2,a3,eta | a1^{m+1}, r_m(a_i,a_j), (a_i-a_j)eta, a1^m eta>."""
    gens = tuple(GradedGenerator.of(n, 2) for n in ("a1", "a2", "a3")) + \
        (GradedGenerator.of("eta", 4 * m - 1),)
    a = [generator_element(gens, n) for n in ("a1", "a2", "a3")]
    eta = generator_element(gens, "eta")
    rels = [a[0] ** (m + 1)]
    pairs = ((0, 1), (0, 2), (1, 2))
    for i, j in pairs:
        rels.append(sum((a[i] ** (m - p) * a[j] ** p for p in range(m + 1)), GCPoly(gens)))
    for i, j in pairs:
        rels.append((a[i] - a[j]) * eta)
    rels.append(a[0] ** m * eta)
    return GradedPresentation(f"ordered(m={m})", gens, tuple(rels))


def _tau_gens(m: int, odd_name: str = "eta") -> tuple:
    return tuple(GradedGenerator.of(n, 2 * (i + 1)) for i, n in enumerate(TAU)) + \
        (GradedGenerator.of(odd_name, 4 * m - 1),)


def _invariant_cocycle_relations(m: int, gens) -> list[GCPoly]:
    P = lambda k: lift(newton_P(k), gens, TAU)  # noqa: E731
    t1, t2, t3 = (generator_element(gens, n) for n in TAU)
    eta = generator_element(gens, "eta")
    return [P(m + 1), P(m + 2), P(m + 3),
            (t1 ** 2 - 3 * t2) * eta, (t1 * t2 - 3 * t3) * eta, P(m) * eta]


def invariant_cocycle_presentation(m: int) -> GradedPresentation:
    gens = _tau_gens(m)
    return GradedPresentation(f"invariant-cocycles(m={m})", gens,
                              tuple(_invariant_cocycle_relations(m, gens)))


def unordered_presentation(m: int, literal: bool = False) -> GradedPresentation:
    """H^*(C(CP^m,3)) in power-sum generators tau1, tau2, tau3 and eta.

    The three quadratic relations are the images of three invariant
    coboundaries from exterior degree two, of degrees 2m, 2m+2, 2m+4.
    ``literal=True`` instead uses sum_{i=1}^{m-1} P_i P_{m-i} and
    sum_{i=2}^{m-2} P_i P_{m-i}, both of degree 2m; that variant kills
    classes in degree 2m and does not reproduce the cohomology.
    """
    gens = _tau_gens(m)
    rels = _invariant_cocycle_relations(m, gens)
    P = lambda k: lift(newton_P(k), gens, TAU)  # noqa: E731
    zero = GCPoly(gens)
    shift = (0, 0) if literal else (1, 2)
    quad = [
        (m + 1) * P(m) - sum((P(i) * P(m - i) for i in range(0, m + 1)), zero),
        sum((P(i) * P(m + shift[0] - i) for i in range(1, m + shift[0])), zero),
        sum((P(i) * P(m + shift[1] - i) for i in range(2, m + shift[1] - 1)), zero),
    ]
    rels += [q for q in quad if not q.is_zero()]
    tag = "unordered-literal" if literal else "unordered"
    return GradedPresentation(f"{tag}(m={m})", gens, tuple(rels))


def cocycle_presentation(m: int) -> GradedPresentation:
    """Algebra of all cocycles of the model: a1..a3 (deg 2), w, v1, v2 (deg 4m-1)."""
    gens = tuple(GradedGenerator.of(n, 2) for n in ("a1", "a2", "a3")) + \
        tuple(GradedGenerator.of(n, 4 * m - 1) for n in ("w", "v1", "v2"))
    a = [generator_element(gens, n) for n in ("a1", "a2", "a3")]
    w, v1, v2 = (generator_element(gens, n) for n in ("w", "v1", "v2"))
    zero = GCPoly(gens)

    def s(k):
        return sum((x ** k for x in a), zero)

    rels = [x ** (m + 1) for x in a]
    rels.append(s(m) * w)
    for v in (v1, v2):
        for i, k in ((0, 1), (0, 2), (1, 2)):
            rels.append((a[i] - a[k]) * v)
    rels += [v1 * v2, v1 * w, v2 * w]
    rels.append((s(1) ** 2 - 3 * s(2)) * w)
    rels.append((s(1) * s(2) - 3 * s(3)) * w)
    third = Fraction(1, 3)
    matrix = (
        (third * s(1), -a[0], 2 * a[0]),
        (third * s(1), 2 * a[0], -a[0]),
        (third * s(1), -a[0], -a[0]),
    )
    for i, row in enumerate(matrix):
        rels.append(w * a[i] - (row[0] * w + row[1] * v1 + row[2] * v2))
    return GradedPresentation(f"cocycles(m={m})", gens, tuple(rels))


def twice_punctured_presentation(m: int) -> GradedPresentation:
    """CP^m minus two points: <y, z | y^m, yz>, |y| = 2, |z| = 2m - 1."""
    gens = (GradedGenerator.of("y", 2), GradedGenerator.of("z", 2 * m - 1))
    y, z = generator_element(gens, "y"), generator_element(gens, "z")
    return GradedPresentation(f"twice-punctured(m={m})", gens, (y ** m, y * z))


def punctured_pair_presentation(m: int) -> GradedPresentation:
    """<y, z, u | y^m, z^m, r_m(y, z), yu, zu>, |y| = |z| = 2, |u| = 4m - 3."""
    gens = (GradedGenerator.of("y", 2), GradedGenerator.of("z", 2),
            GradedGenerator.of("u", 4 * m - 3))
    y, z, u = (generator_element(gens, n) for n in ("y", "z", "u"))
    r = sum((y ** (m - p) * z ** p for p in range(m + 1)), GCPoly(gens))
    return GradedPresentation(f"punctured-pair(m={m})", gens, (y ** m, z ** m, r, y * u, z * u))


def free_presentation(degree: int = 2, relations: Iterable = ()) -> GradedPresentation:
    gens = (GradedGenerator.of("x", degree),)
    x = generator_element(gens, "x")
    rels = tuple(r(x) if callable(r) else r for r in relations)
    return GradedPresentation("free", gens, rels)


PRESENTATIONS = {
    "ordered": ordered_presentation,
    "unordered": unordered_presentation,
    "cocycles": cocycle_presentation,
    "invariant-cocycles": invariant_cocycle_presentation,
    "twice-punctured": twice_punctured_presentation,
    "punctured-pair": punctured_pair_presentation,
}
