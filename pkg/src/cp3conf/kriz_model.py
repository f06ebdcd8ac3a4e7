"""The Kriz model E(CP^m, 3) with rational coefficients.

As an algebra the model is H^*(CP^m)^{(x)3} = Q[x1,x2,x3]/(x_i^{m+1})
tensored with the exterior algebra on odd generators G12, G13, G23 of
degree 2m-1, modulo

    G_ji = G_ij,
    x_j G_ij = x_i G_ij                (i < j),
    G13 G23 = G12 G23 - G12 G13        (three-term rewrite).

The differential kills scalars and sends G_ij to the diagonal class
sum_{a=0}^{m} x_i^a x_j^{m-a}.

A canonical basis monomial is an exponent triple together with a list of
pairs ``(i, j)``, i < j, ordered by increasing ``j``; the exponent of every
slot ``j`` that occurs as a second index is zero.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .exact_linalg import SparseMatrixQ

PAIRS = ((1, 2), (1, 3), (2, 3))
TOP_PAIRS = (((1, 2), (1, 3)), ((1, 2), (2, 3)))


class BasisMonomial(NamedTuple):
    exps: tuple[int, int, int]
    pairs: tuple[tuple[int, int], ...] = ()

    @property
    def q(self) -> int:
        return len(self.pairs)

    def degree(self, m: int) -> int:
        return 2 * sum(self.exps) + self.q * (2 * m - 1)

    def sort_key(self):
        return (self.pairs, self.exps)

    def __str__(self) -> str:
        scal = "⊗".join("1" if e == 0 else ("x" if e == 1 else f"x^{e}") for e in self.exps)
        gens = " ".join(f"G{i}{j}" for i, j in self.pairs)
        return f"{scal} {gens}" if gens else scal


def _collapse(exps: Sequence[int], pairs: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    """Move exponents along every pair onto the smallest slot of its component."""
    parent = [0, 1, 2, 3]

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for i, j in pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    out = [0, 0, 0]
    for slot in (1, 2, 3):
        out[find(slot) - 1] += exps[slot - 1]
    return tuple(out)


def _sort_sign(pairs: list[tuple[int, int]]) -> tuple[int, list[tuple[int, int]]]:
    """Bubble sort by (j, i); each swap of odd generators flips the sign."""
    pairs = list(pairs)
    sign = 1
    n = len(pairs)
    for a in range(n):
        for b in range(n - 1 - a):
            ka = (pairs[b][1], pairs[b][0])
            kb = (pairs[b + 1][1], pairs[b + 1][0])
            if ka > kb:
                pairs[b], pairs[b + 1] = pairs[b + 1], pairs[b]
                sign = -sign
    return sign, pairs


def _reduce_term(coef, exps, pairs, m: int, out: dict) -> None:
    if any(e > m for e in exps):
        return
    oriented = [(min(i, j), max(i, j)) for i, j in pairs]
    if any(i == j for i, j in oriented):
        raise ValueError(f"invalid generator G{oriented}")
    if len(set(oriented)) != len(oriented):
        return  # odd generator squared
    sign, ordered = _sort_sign(oriented)
    coef = coef * sign
    if len(ordered) >= 2:
        for a in range(len(ordered) - 1):
            if ordered[a] == (1, 3) and ordered[a + 1] == (2, 3):
                head, tail = ordered[:a], ordered[a + 2:]
                _reduce_term(coef, exps, head + [(1, 2), (2, 3)] + tail, m, out)
                _reduce_term(-coef, exps, head + [(1, 2), (1, 3)] + tail, m, out)
                return
    if len(ordered) > 2:
        return  # three distinct exterior generators already vanish after rewriting
    new_exps = _collapse(exps, ordered)
    if any(e > m for e in new_exps):
        return
    key = BasisMonomial(new_exps, tuple(ordered))
    out[key] = out.get(key, 0) + coef


def normal_form(raw: Iterable[tuple[object, Sequence[int], Sequence[tuple[int, int]]]],
                m: int) -> "ModelElement":
    """Reduce a formal sum of ``(coef, exps, pairs)`` terms to canonical form."""
    acc: dict[BasisMonomial, Fraction] = {}
    for coef, exps, pairs in raw:
        _reduce_term(Fraction(coef), tuple(exps), list(pairs), m, acc)
    return ModelElement(m, acc)


class ModelElement:
    """Finite rational combination of canonical basis monomials."""

    __slots__ = ("m", "_coeffs")

    def __init__(self, m: int, coeffs: Mapping[BasisMonomial, object] = ()):
        self.m = m
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        self._coeffs = {k: Fraction(v) for k, v in items if v}

    @classmethod
    def scalar(cls, m: int, exps=(0, 0, 0), coef=1) -> "ModelElement":
        return normal_form([(coef, exps, ())], m)

    @classmethod
    def generator(cls, m: int, i: int, j: int) -> "ModelElement":
        return normal_form([(1, (0, 0, 0), [(i, j)])], m)

    def items(self) -> list[tuple[BasisMonomial, Fraction]]:
        return sorted(self._coeffs.items(), key=lambda kv: kv[0].sort_key())

    def coefficient(self, mono: BasisMonomial) -> Fraction:
        return self._coeffs.get(mono, Fraction(0))

    def raw_terms(self) -> Iterator[tuple[Fraction, tuple[int, ...], tuple]]:
        for mono, c in self._coeffs.items():
            yield c, mono.exps, mono.pairs

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(mono.degree(self.m), mono.q) for mono in self._coeffs}

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and other == 0:
            return self.is_zero()
        if not isinstance(other, ModelElement):
            return NotImplemented
        return self.m == other.m and self._coeffs == other._coeffs

    def __add__(self, other: "ModelElement") -> "ModelElement":
        acc = dict(self._coeffs)
        for k, v in other._coeffs.items():
            acc[k] = acc.get(k, 0) + v
        return ModelElement(self.m, acc)

    def __neg__(self) -> "ModelElement":
        return ModelElement(self.m, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: "ModelElement") -> "ModelElement":
        return self + (-other)

    def __rmul__(self, c) -> "ModelElement":
        c = Fraction(c)
        return ModelElement(self.m, {k: c * v for k, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, ModelElement):
            return multiply(self, other)
        return self.__rmul__(other)

    def __repr__(self) -> str:
        return f"ModelElement(m={self.m}, {self})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(f"{c} * {mono}" for mono, c in self.items())


def multiply(a: ModelElement, b: ModelElement) -> ModelElement:
    if a.m != b.m:
        raise ValueError("elements of different models")
    raw = []
    for c1, e1, p1 in a.raw_terms():
        for c2, e2, p2 in b.raw_terms():
            raw.append((c1 * c2, tuple(x + y for x, y in zip(e1, e2)), list(p1) + list(p2)))
    return normal_form(raw, a.m)


def diagonal_terms(m: int, i: int, j: int) -> list[tuple[int, tuple[int, int, int]]]:
    """The diagonal class sum_a x_i^a x_j^{m-a} as ``(coef, exps)`` terms."""
    terms = []
    for a in range(m + 1):
        e = [0, 0, 0]
        e[i - 1] += a
        e[j - 1] += m - a
        terms.append((1, tuple(e)))
    return terms


def diff(e: ModelElement) -> ModelElement:
    """Derivation sending G_ij to the diagonal; sign (-1)^(a-1) at position a."""
    m = e.m
    raw = []
    for c, exps, pairs in e.raw_terms():
        for a, (i, j) in enumerate(pairs):
            sign = -1 if a % 2 else 1
            rest = list(pairs[:a]) + list(pairs[a + 1:])
            for dc, dexps in diagonal_terms(m, i, j):
                raw.append((sign * c * dc, tuple(x + y for x, y in zip(exps, dexps)), rest))
    return normal_form(raw, m)


def basis(m: int, q: int, k: int) -> list[BasisMonomial]:
    """Canonical basis of E_q^k, sorted by (pairs, exps)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if q not in (0, 1, 2):
        raise ValueError(f"exterior degree {q} impossible for three points")
    rest = k - q * (2 * m - 1)
    if rest < 0 or rest % 2:
        return []
    total = rest // 2
    out = []
    if q == 0:
        for e in iproduct(range(m + 1), repeat=3):
            if sum(e) == total:
                out.append(BasisMonomial(e, ()))
    elif q == 1:
        for pair in PAIRS:
            j = pair[1]
            for e in iproduct(range(m + 1), repeat=3):
                if e[j - 1] == 0 and sum(e) == total:
                    out.append(BasisMonomial(e, (pair,)))
    else:
        if total <= m:
            for pairs in TOP_PAIRS:
                out.append(BasisMonomial((total, 0, 0), pairs))
    out.sort(key=BasisMonomial.sort_key)
    return out


class KrizComplex:
    """All bigraded pieces of E(CP^m, 3) with cached differential matrices."""

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("m must be at least 1")
        self.m = m
        self.top = 6 * m
        self._bases: dict[tuple[int, int], list[BasisMonomial]] = {}
        self._index: dict[tuple[int, int], dict[BasisMonomial, int]] = {}
        for q in (0, 1, 2):
            for k in range(self.top + 1):
                b = basis(m, q, k)
                if b:
                    self._bases[(q, k)] = b
                    self._index[(q, k)] = {mono: i for i, mono in enumerate(b)}
        self._diff: dict[tuple[int, int], SparseMatrixQ] = {}

    def bidegrees(self) -> list[tuple[int, int]]:
        return sorted(self._bases)

    def basis(self, q: int, k: int) -> list[BasisMonomial]:
        return self._bases.get((q, k), [])

    def dim(self, q: int, k: int) -> int:
        return len(self._bases.get((q, k), ()))

    def index(self, q: int, k: int) -> dict[BasisMonomial, int]:
        return self._index.get((q, k), {})

    def vector(self, e: ModelElement, q: int, k: int) -> dict[int, Fraction]:
        idx = self.index(q, k)
        out = {}
        for mono, c in e.items():
            if mono not in idx:
                raise ValueError(f"{mono} is not in E_{q}^{k}")
            out[idx[mono]] = c
        return out

    def element(self, vec: Mapping[int, object], q: int, k: int) -> ModelElement:
        b = self.basis(q, k)
        return ModelElement(self.m, {b[i]: c for i, c in vec.items()})

    def diff_matrix(self, q: int, k: int) -> SparseMatrixQ:
        """Matrix of d: E_q^k -> E_{q-1}^{k+1} in the canonical bases."""
        key = (q, k)
        if key not in self._diff:
            src = self.basis(q, k)
            if q == 0:
                self._diff[key] = SparseMatrixQ(0, len(src))
            else:
                tgt_idx = self.index(q - 1, k + 1)
                entries = {}
                for col, mono in enumerate(src):
                    image = diff(ModelElement(self.m, {mono: 1}))
                    for tmono, c in image.items():
                        entries[(tgt_idx[tmono], col)] = c
                self._diff[key] = SparseMatrixQ(self.dim(q - 1, k + 1), len(src), entries)
        return self._diff[key]


# --- named elements --------------------------------------------------------

def _check_exp(m: int, *exps: int) -> None:
    for e in exps:
        if e < 0 or e > m:
            raise ValueError(f"exponent {e} outside [0, {m}]")



def power_sum(m: int, k: int) -> ModelElement:
    """The symmetric scalar x^k(x)1(x)1 + 1(x)x^k(x)1 + 1(x)1(x)x^k."""
    _check_exp(m, k)
    return normal_form([(1, (k, 0, 0), ()), (1, (0, k, 0), ()), (1, (0, 0, k), ())], m)


def slot_scalar(m: int, slot: int, k: int = 1) -> ModelElement:
    """x^k placed in tensor slot ``slot`` (the pullback of x^k along p_slot)."""
    _check_exp(m, k)
    e = [0, 0, 0]
    e[slot - 1] = k
    return normal_form([(1, tuple(e), ())], m)


def invariant_frame(m: int) -> list[ModelElement]:
    """Frame of E_1^{4m-1}(3): the a-th vector has x^{m-a}, x^a spread over the three pairs."""
    frame = []
    for a in range(m + 1):
        frame.append(normal_form([
            (1, (m - a, 0, a), [(1, 2)]),
            (1, (m - a, a, 0), [(1, 3)]),
            (1, (a, m - a, 0), [(2, 3)]),
        ], m))
    return frame


def invariant_cocycle(m: int) -> ModelElement:
    """The cocycle with coefficient 2m - 3a on the a-th invariant frame vector."""
    out = ModelElement(m)
    for a, f in enumerate(invariant_frame(m)):
        out = out + (2 * m - 3 * a) * f
    return out


def standard_cocycle(m: int, which: int) -> ModelElement:
    """One of the two (2,1)-type cocycles in E_1^{4m-1}.

    ``which=1`` pairs G13 with the sum over slots 1,2; ``which=2`` uses G23.
    Both subtract the G12 term summed over slots 1,3.
    """
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    target = (1, 3) if which == 1 else (2, 3)
    raw = []
    for a in range(m + 1):
        raw.append((1, (m - a, a, 0), [target]))
        raw.append((-1, (m - a, 0, a), [(1, 2)]))
    return normal_form(raw, m)


def chain_element(m: int, i: int, j: int) -> ModelElement:
    """x^i(x)1(x)x^j G12 + x^i(x)x^j(x)1 G13 + x^j(x)x^i(x)1 G23."""
    _check_exp(m, i, j)
    if i + j > m:
        raise ValueError(f"i + j = {i + j} exceeds m = {m}")
    return normal_form([
        (1, (i, 0, j), [(1, 2)]),
        (1, (i, j, 0), [(1, 3)]),
        (1, (j, i, 0), [(2, 3)]),
    ], m)


def leading_chain(m: int, k: int) -> ModelElement:
    """x^k(x)1(x)1 G12 + x^k(x)1(x)1 G13 + 1(x)x^k(x)1 G23."""
    _check_exp(m, k)
    return normal_form([
        (1, (k, 0, 0), [(1, 2)]),
        (1, (k, 0, 0), [(1, 3)]),
        (1, (0, k, 0), [(2, 3)]),
    ], m)
