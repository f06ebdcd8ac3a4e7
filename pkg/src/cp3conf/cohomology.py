"""Betti numbers of the model, in total and per isotypic component.

Everything is computed from ranks: for the lambda-part,

    dim Z = rank(pi) - rank(d pi),   dim B = rank(d_in pi_in),

which is valid because d commutes with every projector.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import exact_linalg as la
from .closed_forms import stable_coeffs
from .kriz_model import KrizComplex
from .polys import Poly2
from .symmetry import IRREP_DIM, IRREPS, SymmetricComplex, isotypic_complex, parse_irrep


class NegativeBetti(AssertionError):
    pass


@dataclass
class BettiTable:
    m: int
    dims: dict[tuple[int, int], int] = field(default_factory=dict)
    irrep: tuple | None = None

    def __getitem__(self, qk: tuple[int, int]) -> int:
        return self.dims.get(qk, 0)

    def nonzero(self) -> list[tuple[int, int, int]]:
        return [(q, k, d) for (q, k), d in sorted(self.dims.items()) if d]

    def betti(self, k: int) -> int:
        """Total Betti number in degree k, summed over exterior degrees."""
        return sum(d for (q, kk), d in self.dims.items() if kk == k)

    def poincare(self) -> Poly2:
        return Poly2({(k, q): d for (q, k), d in self.dims.items() if d})


def _as_symmetric(obj) -> SymmetricComplex:
    if isinstance(obj, SymmetricComplex):
        return obj
    return SymmetricComplex(obj)


def _as_complex(obj) -> KrizComplex:
    if isinstance(obj, SymmetricComplex):
        return obj.cx
    if isinstance(obj, KrizComplex):
        return obj
    return KrizComplex(obj)


def _table(m: int, top: int, z, b, irrep=None) -> BettiTable:
    dims = {}
    for q in (0, 1, 2):
        for k in range(top + 1):
            h = z(q, k) - b(q, k)
            if h < 0:
                raise NegativeBetti(f"H_{q}^{k} = {h} (m={m}, irrep={irrep})")
            if h:
                dims[(q, k)] = h
    return BettiTable(m, dims, irrep)


def betti(cx) -> BettiTable:
    cx = _as_complex(cx)

    def z(q, k):
        return cx.dim(q, k) - la.rank(cx.diff_matrix(q, k))

    def b(q, k):
        return la.rank(cx.diff_matrix(q + 1, k - 1)) if k >= 1 else 0

    return _table(cx.m, cx.top, z, b)


def _restricted_rank(sc: SymmetricComplex, lam, q: int, k: int) -> int:
    if q == 0 or sc.cx.dim(q, k) == 0:
        return 0
    return la.rank(sc.cx.diff_matrix(q, k) @ sc.projector(lam, q, k))


def betti_isotypic(lam, sc) -> BettiTable:
    """Betti table of the lambda-part, counted with full dimension (mult * dim V)."""
    sc = _as_symmetric(sc)
    lam = parse_irrep(lam)

    def z(q, k):
        return sc.isotypic_dim(lam, q, k) - _restricted_rank(sc, lam, q, k)

    def b(q, k):
        return _restricted_rank(sc, lam, q + 1, k - 1) if k >= 1 else 0

    return _table(sc.m, sc.cx.top, z, b, lam)


def betti_isotypic_restricted(lam, sc) -> BettiTable:
    """Same table computed from the explicitly restricted subcomplex."""
    sc = _as_symmetric(sc)
    ic = isotypic_complex(lam, sc)

    def z(q, k):
        d = ic.diffs.get((q, k))
        n = ic.dim(q, k)
        return n - (la.rank(d) if d is not None else 0)

    def b(q, k):
        d = ic.diffs.get((q + 1, k - 1))
        return la.rank(d) if d is not None else 0

    return _table(sc.m, sc.cx.top, z, b, ic.lam)


def poincare(cx) -> Poly2:
    return betti(cx).poincare()


def poincare_isotypic(lam, sc) -> Poly2:
    return betti_isotypic(lam, sc).poincare()


def cocycle_dims(cx, lam=None) -> dict[tuple[int, int], int]:
    """dim ker d per bidegree, optionally restricted to one isotypic part."""
    if lam is None:
        cx = _as_complex(cx)
        return {(q, k): cx.dim(q, k) - la.rank(cx.diff_matrix(q, k))
                for q, k in cx.bidegrees()}
    sc = _as_symmetric(cx)
    lam = parse_irrep(lam)
    out = {}
    for q, k in sc.cx.bidegrees():
        z = sc.isotypic_dim(lam, q, k) - _restricted_rank(sc, lam, q, k)
        if z:
            out[(q, k)] = z
    return out


def cocycle_poincare(cx, lam=None) -> Poly2:
    return Poly2({(k, q): d for (q, k), d in cocycle_dims(cx, lam).items() if d})


def stable_range_check(cx, max_k: int | None = None) -> bool:
    """Compare low-degree Betti numbers with those of (CP^inf)^3."""
    cx = _as_complex(cx)
    if max_k is None:
        max_k = 2 * cx.m - 1
    table = betti(cx)
    series = stable_coeffs(3, max_k)
    return all(table.betti(k) == series[k] for k in range(max_k + 1))


def euler_chains(cx) -> list[tuple[int, int, int]]:
    """For each line k + q = N: (N, alternating dim sum of E, of H)."""
    cx = _as_complex(cx)
    table = betti(cx)
    out = []
    for n in range(cx.top + 3):
        e = sum((-1) ** q * cx.dim(q, n - q) for q in (0, 1, 2) if n - q >= 0)
        h = sum((-1) ** q * table[(q, n - q)] for q in (0, 1, 2) if n - q >= 0)
        out.append((n, e, h))
    return out


def weighted_multiplicity_check(sc) -> bool:
    """sum_lambda dim V(lambda) * mult(lambda) = dim E_q^k on every block."""
    sc = _as_symmetric(sc)
    for q, k in sc.cx.bidegrees():
        mult = sc.multiplicities(q, k)
        if sum(IRREP_DIM[lam] * mu for lam, mu in zip(IRREPS, mult)) != sc.cx.dim(q, k):
            return False
    return True
