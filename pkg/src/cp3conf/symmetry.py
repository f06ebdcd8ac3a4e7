"""S3 action on the model, characters, multiplicities and isotypic pieces."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import exact_linalg as la
from .exact_linalg import SparseMatrixQ
from .kriz_model import KrizComplex, ModelElement, normal_form

# a permutation is the tuple (sigma(1), sigma(2), sigma(3))
Permutation = tuple
IDENTITY: Permutation = (1, 2, 3)
S3: tuple[Permutation, ...] = ((1, 2, 3), (2, 1, 3), (3, 2, 1), (1, 3, 2), (2, 3, 1), (3, 1, 2))

IRREPS = ((3,), (2, 1), (1, 1, 1))
IRREP_DIM = {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
CLASS_SIZES = (1, 3, 2)
# characters on (identity, transpositions, 3-cycles)
CHARACTERS = {
    (3,): (1, 1, 1),
    (2, 1): (2, 0, -1),
    (1, 1, 1): (1, -1, 1),
}


class EquivarianceError(AssertionError):
    pass


class NonIntegralMultiplicity(AssertionError):
    pass


def parse_irrep(label) -> tuple[int, ...]:
    """Accept (2, 1), "2,1", "21", "(2,1)" and friends."""
    if isinstance(label, tuple):
        lam = label
    else:
        s = str(label).strip().strip("()").replace(" ", "")
        lam = tuple(int(p) for p in (s.split(",") if "," in s else s))
    if lam not in CHARACTERS:
        raise ValueError(f"{label!r} is not a partition of 3")
    return lam


def irrep_name(lam: tuple[int, ...]) -> str:
    return ",".join(str(p) for p in lam)


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """(sigma tau)(i) = sigma(tau(i))."""
    return tuple(sigma[tau[i] - 1] for i in range(3))


def inverse(sigma: Permutation) -> Permutation:
    out = [0, 0, 0]
    for i, s in enumerate(sigma, start=1):
        out[s - 1] = i
    return tuple(out)


def conjugacy_class(sigma: Permutation) -> int:
    fixed = sum(1 for i, s in enumerate(sigma, start=1) if i == s)
    return {3: 0, 1: 1, 0: 2}[fixed]


def character(lam, sigma: Permutation) -> int:
    return CHARACTERS[parse_irrep(lam)][conjugacy_class(sigma)]


def act(sigma: Permutation, e: ModelElement) -> ModelElement:
    """Move the slot-i scalar to slot sigma(i) and relabel G_ij as G_sigma(i)sigma(j)."""
    raw = []
    for c, exps, pairs in e.raw_terms():
        new = [0, 0, 0]
        for i in range(3):
            new[sigma[i] - 1] = exps[i]
        raw.append((c, tuple(new), [(sigma[i - 1], sigma[j - 1]) for i, j in pairs]))
    return normal_form(raw, e.m)


def action_matrix(sigma: Permutation, cx: KrizComplex, q: int, k: int) -> SparseMatrixQ:
    src = cx.basis(q, k)
    idx = cx.index(q, k)
    entries = {}
    for col, mono in enumerate(src):
        for tmono, c in act(sigma, ModelElement(cx.m, {mono: 1})).items():
            entries[(idx[tmono], col)] = c
    return SparseMatrixQ(len(src), len(src), entries)


class SymmetricComplex:
    """A KrizComplex with cached action matrices and projectors."""

    def __init__(self, cx: KrizComplex | int):
        self.cx = cx if isinstance(cx, KrizComplex) else KrizComplex(cx)
        self.m = self.cx.m
        self._action: dict = {}
        self._proj: dict = {}

    def action(self, sigma: Permutation, q: int, k: int) -> SparseMatrixQ:
        key = (sigma, q, k)
        if key not in self._action:
            self._action[key] = action_matrix(sigma, self.cx, q, k)
        return self._action[key]

    def projector(self, lam, q: int, k: int) -> SparseMatrixQ:
        lam = parse_irrep(lam)
        key = (lam, q, k)
        if key not in self._proj:
            n = self.cx.dim(q, k)
            acc = SparseMatrixQ(n, n)
            for sigma in S3:
                acc = la.add(acc, la.scale(self.action(sigma, q, k), character(lam, sigma)))
            self._proj[key] = la.scale(acc, Fraction(IRREP_DIM[lam], 6))
        return self._proj[key]

    def multiplicity(self, lam, q: int, k: int) -> int:
        lam = parse_irrep(lam)
        total = sum((character(lam, s) * self.action(s, q, k).trace() for s in S3), Fraction(0))
        mult = total / 6
        if mult.denominator != 1 or mult < 0:
            raise NonIntegralMultiplicity(f"{lam} at (q={q}, k={k}): {mult}")
        return int(mult)

    def multiplicities(self, q: int, k: int) -> tuple[int, int, int]:
        return tuple(self.multiplicity(lam, q, k) for lam in IRREPS)

    def isotypic_dim(self, lam, q: int, k: int) -> int:
        return la.rank(self.projector(lam, q, k))

    def check_equivariance(self, q: int, k: int, sigmas: Iterable[Permutation] = S3) -> None:
        if q == 0 or self.cx.dim(q, k) == 0:
            return
        d = self.cx.diff_matrix(q, k)
        for s in sigmas:
            left = self.action(s, q - 1, k + 1) @ d
            right = d @ self.action(s, q, k)
            if left != right:
                raise EquivarianceError(f"sigma={s} fails on E_{q}^{k}")


@dataclass(frozen=True)
class IsotypicBlock:
    """lambda-part of one bidegree: RREF basis (in canonical coordinates) and pivots."""
    q: int
    k: int
    basis: tuple
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class IsotypicComplex:
    lam: tuple
    blocks: dict
    # restricted differential per source bidegree, in block coordinates
    diffs: dict

    def dim(self, q: int, k: int) -> int:
        b = self.blocks.get((q, k))
        return b.dim if b else 0


def isotypic_complex(lam, sc: SymmetricComplex | KrizComplex | int) -> IsotypicComplex:
    """Restrict d to the image of the lambda-projector in every bidegree."""
    if not isinstance(sc, SymmetricComplex):
        sc = SymmetricComplex(sc)
    lam = parse_irrep(lam)
    cx = sc.cx
    blocks = {}
    for q, k in cx.bidegrees():
        vecs, piv = la.column_space_basis(sc.projector(lam, q, k))
        blocks[(q, k)] = IsotypicBlock(q, k, tuple(vecs), tuple(piv))
    diffs = {}
    for (q, k), blk in blocks.items():
        if q == 0:
            continue
        tgt = blocks.get((q - 1, k + 1))
        d = cx.diff_matrix(q, k)
        cols = []
        for v in blk.basis:
            image = la.apply(d, v)
            if tgt is None:
                if image:
                    raise EquivarianceError(f"d leaves the {lam}-part at E_{q}^{k}")
                cols.append({})
                continue
            coords = la.coordinates(image, tgt.basis, tgt.pivots)
            if coords is None:
                raise EquivarianceError(f"d leaves the {lam}-part at E_{q}^{k}")
            cols.append({i: c for i, c in enumerate(coords) if c})
        rows = tgt.dim if tgt else 0
        diffs[(q, k)] = SparseMatrixQ.from_columns(rows, cols)
    return IsotypicComplex(lam, blocks, diffs)
