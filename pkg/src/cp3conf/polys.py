"""Sparse multivariate polynomials with exact coefficients.

A polynomial is an immutable mapping from exponent tuples to nonzero
coefficients (``int`` or ``Fraction``).  ``Poly1`` is the one-variable
specialisation in ``t`` and ``Poly2`` the two-variable one in ``(t, s)``
used for bigraded Poincare polynomials.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Coeff = Union[int, Fraction]
Exps = tuple


def _clean(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly:
    __slots__ = ("names", "_terms", "_hash")

    def __init__(self, terms: Mapping[Exps, Coeff] | Iterable[tuple[Exps, Coeff]] = (),
                 names: Sequence[str] = ("t",)):
        self.names = tuple(names)
        n = len(self.names)
        acc: dict[Exps, Coeff] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent {exps} does not match variables {self.names}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent {exps}")
            acc[exps] = acc.get(exps, 0) + c
        self._terms = {e: _clean(c) for e, c in acc.items() if c != 0}
        self._hash = None

    # construction helpers
    @classmethod
    def var(cls, i: int, names: Sequence[str]) -> "Poly":
        exps = [0] * len(names)
        exps[i] = 1
        return cls({tuple(exps): 1}, names)

    @classmethod
    def const(cls, c: Coeff, names: Sequence[str]) -> "Poly":
        return cls({(0,) * len(names): c}, names)

    def _like(self, terms) -> "Poly":
        out = object.__new__(type(self))
        Poly.__init__(out, terms, self.names)
        return out

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.names != self.names:
                raise ValueError(f"variable mismatch {self.names} vs {other.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return self._like({(0,) * len(self.names): other})
        return NotImplemented

    # mapping-ish access
    def terms(self) -> dict[Exps, Coeff]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exps, Coeff]]:
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[Exps]:
        return iter(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, exps) -> Coeff:
        if isinstance(exps, int):
            exps = (exps,)
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return self._like(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Exps, Coeff] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return self._like(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self._like({(0,) * len(self.names): 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._like({(0,) * len(self.names): other})
        if not isinstance(other, Poly):
            return NotImplemented
        return self.names == other.names and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.names, frozenset(self._terms.items())))
        return self._hash

    # evaluation and substitution
    def __call__(self, *values):
        if len(values) != len(self.names):
            raise ValueError("wrong number of values")
        total = 0
        for exps, c in self._terms.items():
            term = c
            for v, e in zip(values, exps):
                term = term * v ** e
            total = total + term
        return total

    def substitute(self, i: int, value: Coeff) -> "Poly":
        """Set variable ``i`` to a constant, keeping the same variable list."""
        acc: dict[Exps, Coeff] = {}
        for exps, c in self._terms.items():
            e = list(exps)
            k = e[i]
            e[i] = 0
            key = tuple(e)
            acc[key] = acc.get(key, 0) + c * value ** k
        return self._like(acc)

    def degree(self, weights: Sequence[int] | None = None) -> int:
        if not self._terms:
            return -1
        w = weights or (1,) * len(self.names)
        return max(sum(a * b for a, b in zip(e, w)) for e in self._terms)

    def is_homogeneous(self, weights: Sequence[int]) -> bool:
        degs = {sum(a * b for a, b in zip(e, weights)) for e in self._terms}
        return len(degs) <= 1

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in sorted(self._terms.items(), key=_display_key):
            mono = " ".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.names, exps) if e
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            elif isinstance(c, int):
                body = f"{abs(c)}{mono}"
            else:
                body = f"({abs(c)}){mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _display_key(item):
    exps, _ = item
    # s-degree first for Poly2 so even and odd parts group together
    return tuple(reversed(exps))


class Poly1(Poly):
    """Integer polynomial in ``t``; ``p[d]`` is the coefficient of ``t^d``."""

    def __init__(self, terms=(), names=("t",)):
        if isinstance(terms, Mapping):
            terms = {(e,) if isinstance(e, int) else e: c for e, c in terms.items()}
        super().__init__(terms, names)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Coeff]) -> "Poly1":
        return cls({(d,): c for d, c in enumerate(coeffs) if c})

    def coeffs(self, upto: int | None = None) -> list[Coeff]:
        top = self.degree() if upto is None else upto
        return [self[d] for d in range(top + 1)]

    def truncate(self, degree: int) -> "Poly1":
        return Poly1({e: c for e, c in self._terms.items() if e[0] <= degree})

    def even_coeffs(self, top: int) -> list[Coeff]:
        return [self[d] for d in range(0, top + 1, 2)]

    def odd_coeffs(self, top: int) -> list[Coeff]:
        return [self[d] for d in range(1, top + 1, 2)]


class Poly2(Poly):
    """Integer polynomial in ``(t, s)``: ``t`` tracks degree, ``s`` exterior degree."""

    def __init__(self, terms=(), names=("t", "s")):
        super().__init__(terms, names)

    @classmethod
    def from_poly1(cls, p: Poly1, s_power: int = 0) -> "Poly2":
        return cls({(e[0], s_power): c for e, c in p.terms().items()})

    def at_s1(self) -> Poly1:
        acc: dict[Exps, Coeff] = {}
        for (t, _), c in self._terms.items():
            acc[(t,)] = acc.get((t,), 0) + c
        return Poly1(acc)

    def s_part(self, q: int) -> Poly1:
        return Poly1({(t,): c for (t, s), c in self._terms.items() if s == q})

    def as_records(self) -> list[dict[str, int]]:
        return [{"t": t, "s": s, "c": int(c)} for (t, s), c in
                sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))]


T = Poly1({(1,): 1})
S = Poly2({(0, 1): 1})
T2 = Poly2({(1, 0): 1})
