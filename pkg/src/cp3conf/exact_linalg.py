"""Exact sparse linear algebra over the rationals.

Entries are ``fractions.Fraction``; a matrix stores only its nonzero
entries.  Rank uses fraction-free elimination on integer rows (each row is
first scaled to a primitive integer vector); kernels and row-space bases
use normalized-pivot rational elimination.  Both process rows in index
order and pivot on the smallest column of the current row, so results do
not depend on dict iteration order.
"""
from __future__ import annotations

import io
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence


class DimensionMismatch(ValueError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class SparseMatrixQ:
    """Immutable sparse rational matrix."""

    __slots__ = ("rows", "cols", "_entries", "_rank")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], object] = ()):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimension")
        self.rows = rows
        self.cols = cols
        clean = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for (i, j), v in items:
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols}")
            v = _frac(v)
            if v:
                clean[(i, j)] = v
        self._entries = clean
        self._rank = None

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[object]]) -> "SparseMatrixQ":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls(rows, cols, {(i, j): v for i, row in enumerate(data)
                                for j, v in enumerate(row) if v})

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping[int, object]]) -> "SparseMatrixQ":
        return cls(rows, len(columns), {(i, j): v for j, col in enumerate(columns)
                                        for i, v in col.items()})

    @classmethod
    def identity(cls, n: int) -> "SparseMatrixQ":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMatrixQ":
        return cls(rows, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def entries(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._entries)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self._entries.get(ij, Fraction(0))

    def nnz(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def row_dicts(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [{} for _ in range(self.rows)]
        for (i, j), v in self._entries.items():
            out[i][j] = v
        return out

    def column(self, j: int) -> dict[int, Fraction]:
        return {i: v for (i, jj), v in self._entries.items() if jj == j}

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> "SparseMatrixQ":
        return SparseMatrixQ(self.cols, self.rows, {(j, i): v for (i, j), v in self._entries.items()})

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((v for (i, j), v in self._entries.items() if i == j), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrixQ):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.shape, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        return f"SparseMatrixQ({self.rows}x{self.cols}, nnz={self.nnz()})"

    def __matmul__(self, other: "SparseMatrixQ") -> "SparseMatrixQ":
        return multiply(self, other)

    def __add__(self, other: "SparseMatrixQ") -> "SparseMatrixQ":
        return add(self, other)

    def __sub__(self, other: "SparseMatrixQ") -> "SparseMatrixQ":
        return add(self, scale(other, -1))

    def to_matrix_market(self) -> str:
        buf = io.StringIO()
        buf.write("%%MatrixMarket matrix coordinate rational general\n")
        buf.write(f"{self.rows} {self.cols} {self.nnz()}\n")
        for (i, j), v in sorted(self._entries.items()):
            buf.write(f"{i + 1} {j + 1} {v.numerator}/{v.denominator}\n")
        return buf.getvalue()

    @classmethod
    def from_matrix_market(cls, text: str) -> "SparseMatrixQ":
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("%")]
        rows, cols, _ = (int(x) for x in lines[0].split())
        entries = {}
        for ln in lines[1:]:
            i, j, v = ln.split()
            entries[(int(i) - 1, int(j) - 1)] = Fraction(v)
        return cls(rows, cols, entries)


def multiply(a: SparseMatrixQ, b: SparseMatrixQ) -> SparseMatrixQ:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    b_rows = b.row_dicts()
    acc: dict[tuple[int, int], Fraction] = {}
    for (i, k), v in a._entries.items():
        for j, w in b_rows[k].items():
            acc[(i, j)] = acc.get((i, j), 0) + v * w
    return SparseMatrixQ(a.rows, b.cols, acc)


def add(a: SparseMatrixQ, b: SparseMatrixQ) -> SparseMatrixQ:
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot add {a.shape} and {b.shape}")
    acc = dict(a._entries)
    for ij, v in b._entries.items():
        acc[ij] = acc.get(ij, 0) + v
    return SparseMatrixQ(a.rows, a.cols, acc)


def scale(a: SparseMatrixQ, c) -> SparseMatrixQ:
    c = _frac(c)
    return SparseMatrixQ(a.rows, a.cols, {ij: c * v for ij, v in a._entries.items()})


def hstack(blocks: Sequence[SparseMatrixQ]) -> SparseMatrixQ:
    rows = blocks[0].rows
    entries = {}
    off = 0
    for b in blocks:
        if b.rows != rows:
            raise DimensionMismatch("hstack row mismatch")
        for (i, j), v in b._entries.items():
            entries[(i, j + off)] = v
        off += b.cols
    return SparseMatrixQ(rows, off, entries)


# --- elimination -----------------------------------------------------------

def _primitive_int_row(row: Mapping[int, Fraction]) -> dict[int, int]:
    den = 1
    for v in row.values():
        den = lcm(den, v.denominator)
    ints = {j: int(v * den) for j, v in row.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {j: v // g for j, v in ints.items()}
    return ints


def _integer_rank(rows: Iterable[dict[int, int]]) -> int:
    """Fraction-free incremental echelon form; returns the number of pivots.

    A new row is cleared against existing pivots by ``r <- p*r - r[c]*P``
    and divided by its content, so entries stay integral and small.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = dict(row)
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = r
                break
            p = piv[c]
            a = r[c]
            g = gcd(p, a)
            p //= g
            a //= g
            new = {j: p * v for j, v in r.items()}
            for j, v in piv.items():
                w = new.get(j, 0) - a * v
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                new = {j: v // g for j, v in new.items()}
            r = new
    return len(pivots)


def rank(m: SparseMatrixQ) -> int:
    if m._rank is None:
        # eliminate along the shorter side
        src = m if m.rows <= m.cols else m.transpose()
        m._rank = _integer_rank(_primitive_int_row(r) for r in src.row_dicts() if r)
    return m._rank


def rank_rational(m: SparseMatrixQ) -> int:
    """Rank by normalized-pivot rational elimination (independent route)."""
    return len(_rational_echelon(m.row_dicts())[0])


def _rational_echelon(rows: Iterable[Mapping[int, Fraction]]):
    """Incremental echelon with unit pivots; returns (pivot col -> row, order)."""
    pivots: dict[int, dict[int, Fraction]] = {}
    order: list[int] = []
    for row in rows:
        r = {j: Fraction(v) for j, v in row.items() if v}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = 1 / r[c]
                pivots[c] = {j: v * inv for j, v in r.items()}
                order.append(c)
                break
            a = r[c]
            for j, v in piv.items():
                w = r.get(j, 0) - a * v
                if w:
                    r[j] = w
                else:
                    r.pop(j, None)
    return pivots, order


def rref(m: SparseMatrixQ) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Reduced row echelon form: nonzero rows sorted by pivot column."""
    pivots, _ = _rational_echelon(m.row_dicts())
    cols = sorted(pivots)
    # back-substitute from the last pivot upwards
    for c in reversed(cols):
        prow = pivots[c]
        for c2 in cols:
            if c2 >= c:
                break
            r = pivots[c2]
            a = r.get(c)
            if a:
                for j, v in prow.items():
                    w = r.get(j, 0) - a * v
                    if w:
                        r[j] = w
                    else:
                        r.pop(j, None)
    return [pivots[c] for c in cols], cols


def kernel(m: SparseMatrixQ) -> list[dict[int, Fraction]]:
    """Basis of the right null space, one sparse vector per free column."""
    rows, pcols = rref(m)
    pivot_set = set(pcols)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = {f: Fraction(1)}
        for r, c in zip(rows, pcols):
            a = r.get(f)
            if a:
                v[c] = -a
        basis.append(v)
    return basis


def nullity(m: SparseMatrixQ) -> int:
    return m.cols - rank(m)


def apply(m: SparseMatrixQ, v: Mapping[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for (i, j), a in m._entries.items():
        x = v.get(j)
        if x:
            out[i] = out.get(i, 0) + a * x
    return {i: x for i, x in out.items() if x}


def column_space_basis(m: SparseMatrixQ) -> tuple[list[dict[int, Fraction]], list[int]]:
    """RREF basis of the column space; vectors have unit entries at ``pivots``.

    The coordinates of any vector in the span are its entries at the pivot
    positions.
    """
    return rref(m.transpose())


def coordinates(vec: Mapping[int, Fraction], basis: Sequence[Mapping[int, Fraction]],
                pivots: Sequence[int]) -> list[Fraction] | None:
    """Coordinates of ``vec`` in an RREF basis, or None when not in the span."""
    coords = [Fraction(vec.get(p, 0)) for p in pivots]
    recon: dict[int, Fraction] = {}
    for c, b in zip(coords, basis):
        if c:
            for j, v in b.items():
                recon[j] = recon.get(j, 0) + c * v
    recon = {j: v for j, v in recon.items() if v}
    clean = {j: Fraction(v) for j, v in vec.items() if v}
    return coords if recon == clean else None
