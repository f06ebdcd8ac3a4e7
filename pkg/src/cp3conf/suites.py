"""Verification suites run by ``cp3conf verify``.

A suite maps one value of m to a list of ``Check`` records.  The runner fans
out over (suite, m) pairs and always returns results in task order, so the
report does not depend on the number of workers.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import closed_forms as cf
from . import exact_linalg as la
from . import kriz_model as km
from . import partitions as pt
from . import presentations as pr
from .cohomology import (betti, betti_isotypic, betti_isotypic_restricted, cocycle_dims,
                         euler_chains, poincare, poincare_isotypic, stable_range_check)
from .polys import Poly1, Poly2
from .symmetry import IRREPS, S3, SymmetricComplex, compose, irrep_name

JOBS_ENV = "CP3CONF_JOBS"


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    status: str  # "pass" | "fail"
    expected: str = ""
    computed: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def _check(name, anchor, ok, expected="", computed="") -> Check:
    return Check(name, anchor, "pass" if ok else "fail", str(expected), str(computed))


def _compare(name, anchor, expected, computed) -> Check:
    return _check(name, anchor, expected == computed, expected, computed)


@lru_cache(maxsize=8)
def symmetric_complex(m: int) -> SymmetricComplex:
    return SymmetricComplex(m)


# --- suites ----------------------------------------------------------------

def suite_partitions(m: int) -> list[Check]:
    out = []
    top = max(60, 3 * m + 3)
    bad = [k for k in range(top + 1) if pt.p3_bounded(m, k) != len(pt.enumerate_p3_bounded(m, k))]
    out.append(_check(f"m={m} bounded partition count vs enumeration, k<={top}",
                      "bounded partition closed form", not bad, "[]", bad))
    bad = [k for k in range(61) if pt.p3(k) != len(pt.enumerate_p3_bounded(k, k))]
    out.append(_check(f"m={m} partition count vs enumeration, k<=60",
                      "nearest-integer partition formula", not bad, "[]", bad))
    bad = []
    for k in range(3 * m // 2 + 1):
        try:
            if pt.multiplicities(m, k) != pt.multiplicities_by_orbits(m, k):
                bad.append(k)
        except pt.FormulaMismatch:
            bad.append(k)
    out.append(_check(f"m={m} multiplicity formulas vs orbit count",
                      "multiplicity table formulas", not bad, "[]", bad))
    seq = pt.bounded_sequence(m)
    peak = seq.index(max(seq))
    out.append(_check(f"m={m} bounded partitions symmetric and unimodal",
                      "bounded partition sequence shape",
                      pt.is_symmetric(seq) and pt.is_unimodal(seq) and seq[3 * m // 2] == max(seq),
                      "symmetric, unimodal", f"{seq} (first peak at {peak})"))
    return out


def suite_model(m: int) -> list[Check]:
    sc = symmetric_complex(m)
    cx = sc.cx
    out = []
    bad = []
    for q, k in cx.bidegrees():
        if q == 2:
            dd = cx.diff_matrix(1, k + 1) @ cx.diff_matrix(2, k)
            if not dd.is_zero():
                bad.append((q, k))
    out.append(_check(f"m={m} d^2 = 0", "differential squares to zero", not bad, "[]", bad))
    bad = []
    for q, k in cx.bidegrees():
        try:
            sc.check_equivariance(q, k)
        except AssertionError:
            bad.append((q, k))
    out.append(_check(f"m={m} d is S3-equivariant", "equivariance of d", not bad, "[]", bad))
    bad = []
    for q, k in cx.bidegrees():
        for s in S3:
            for t in S3:
                if sc.action(compose(s, t), q, k) != sc.action(s, q, k) @ sc.action(t, q, k):
                    bad.append((q, k, s, t))
    out.append(_check(f"m={m} action is a representation", "homomorphism property",
                      not bad, "[]", bad[:5]))
    bad = []
    for q, k in cx.bidegrees():
        n = cx.dim(q, k)
        projs = {lam: sc.projector(lam, q, k) for lam in IRREPS}
        total = la.SparseMatrixQ(n, n)
        for lam, p in projs.items():
            total = total + p
            if p @ p != p:
                bad.append((q, k, lam, "idempotent"))
            for mu, p2 in projs.items():
                if mu != lam and not (p @ p2).is_zero():
                    bad.append((q, k, lam, mu))
        if total != la.SparseMatrixQ.identity(n):
            bad.append((q, k, "complete"))
    out.append(_check(f"m={m} projectors idempotent, orthogonal, complete",
                      "isotypic projectors", not bad, "[]", bad[:5]))
    if m >= 2:
        out.extend(_explicit_elements(m, sc))
    return out


def _explicit_elements(m: int, sc: SymmetricComplex) -> list[Check]:
    cx = sc.cx
    out = []
    w = km.invariant_cocycle(m)
    out.append(_check(f"m={m} invariant cocycle is closed", "explicit invariant cocycle",
                      km.diff(w).is_zero(), "0", km.diff(w)))
    k = 4 * m - 1
    d2 = cx.diff_matrix(2, k - 1)
    vec = cx.vector(w, 1, k)
    col = la.SparseMatrixQ.from_columns(cx.dim(1, k), [vec])
    nontrivial = la.rank(la.hstack([d2, col])) > la.rank(d2)
    out.append(_check(f"m={m} invariant cocycle is not a coboundary",
                      "explicit invariant cocycle", nontrivial, "class != 0",
                      "class != 0" if nontrivial else "class = 0"))
    powers = [not km.multiply(km.power_sum(m, j), w).is_zero() for j in range(1, m + 1)]
    expected = [True] * (m - 1) + [False]
    out.append(_compare(f"m={m} power sums times invariant cocycle nonzero below m",
                        "annihilator of the invariant cocycle", expected, powers))
    v1, v2 = km.standard_cocycle(m, 1), km.standard_cocycle(m, 2)
    out.append(_check(f"m={m} (2,1)-type cocycles closed", "explicit standard cocycles",
                      km.diff(v1).is_zero() and km.diff(v2).is_zero()))
    for lam, form in (((3,), cf.invariant_cocycle_poincare), ((2, 1), cf.standard_cocycle_poincare)):
        got = Poly2({(kk, q): v for (q, kk), v in cocycle_dims(sc, lam).items() if q == 1})
        out.append(_compare(f"m={m} exterior-degree-one cocycles of the {irrep_name(lam)}-part",
                            "cocycle Poincare polynomials", form(m), got))
    dims = [Poly2({(kk, q): cx.dim(q, kk) for kk in range(cx.top + 1) if cx.dim(q, kk)})
            for q in (0, 1, 2)]
    out.append(_compare(f"m={m} model dimensions", "model Poincare polynomial",
                        [str(cf.model_poincare(m, q)) for q in (0, 1, 2)], [str(d) for d in dims]))
    return out


def suite_multiplicities(m: int) -> list[Check]:
    sc = symmetric_complex(m)
    out = []
    bad = []
    for k in range(3 * m + 1):
        row = tuple(pt.multiplicities(m, min(k, 3 * m - k)))
        if sc.multiplicities(0, 2 * k) != row:
            bad.append((0, 2 * k, sc.multiplicities(0, 2 * k), row))
    for k in range(m + 1):
        for deg in (2 * m - 1 + 2 * k, 6 * m - 1 - 2 * k):
            if sc.multiplicities(1, deg) != (k + 1, k + 1, 0):
                bad.append((1, deg, sc.multiplicities(1, deg), (k + 1, k + 1, 0)))
    for k in range(m + 1):
        deg = 2 * (2 * m - 1) + 2 * k
        dual = 2 * (3 * m - 1) - 2 * k
        if sc.multiplicities(2, deg) != (0, 1, 0) or sc.multiplicities(2, dual) != (0, 1, 0):
            bad.append((2, deg))
    out.append(_check(f"m={m} trace multiplicities match the table", "multiplicity table",
                      not bad, "[]", bad[:5]))
    ok = all(sum(d * mu for d, mu in zip((1, 2, 1), sc.multiplicities(q, k))) == sc.cx.dim(q, k)
             for q, k in sc.cx.bidegrees())
    out.append(_check(f"m={m} weighted multiplicities give dimensions", "dimension accounting", ok))
    return out


def suite_betti(m: int) -> list[Check]:
    sc = symmetric_complex(m)
    out = [_compare(f"m={m} Poincare polynomial", "ordered Poincare closed form",
                    cf.ordered_poincare(m), poincare(sc.cx))]
    if m >= 2:
        for lam in IRREPS:
            rank_route = betti_isotypic(lam, sc)
            out.append(_compare(f"m={m} Poincare polynomial of the {irrep_name(lam)}-part",
                                "isotypic Poincare closed form",
                                cf.isotypic_poincare(lam, m), rank_route.poincare()))
            out.append(_compare(f"m={m} {irrep_name(lam)}-part: projector ranks vs restricted complex",
                                "isotypic Betti numbers by two routes",
                                rank_route.nonzero(), betti_isotypic_restricted(lam, sc).nonzero()))
    out.append(_check(f"m={m} no cohomology in exterior degree two", "injectivity on top exterior degree",
                      all(q != 2 for q, _, _ in betti(sc.cx).nonzero())))
    bad = [row for row in euler_chains(sc.cx) if row[1] != row[2]]
    out.append(_check(f"m={m} Euler characteristic along each line", "Euler characteristic",
                      not bad, "[]", bad))
    out.append(_check(f"m={m} closed forms internally consistent", "closed form cross-checks",
                      cf.ordered_consistency(m) and (m < 2 or cf.total_from_isotypic(m) == cf.ordered_poincare(m))))
    return out


def _collapse_q(dims: dict) -> Poly1:
    acc: dict = {}
    for (q, k), v in dims.items():
        acc[(k,)] = acc.get((k,), 0) + v
    return Poly1(acc)


def suite_presentations(m: int) -> list[Check]:
    if m < 2:
        return []
    sc = symmetric_complex(m)
    top, window = 6 * m, 4
    targets = (
        ("ordered", pr.ordered_presentation(m), cf.ordered_poincare(m).at_s1(),
         "ordered cohomology presentation"),
        ("unordered", pr.unordered_presentation(m), cf.unordered_poincare(m).at_s1(),
         "unordered cohomology presentation"),
        ("invariant cocycles", pr.invariant_cocycle_presentation(m),
         _collapse_q(cocycle_dims(sc, (3,))), "invariant cocycle presentation"),
        ("cocycles", pr.cocycle_presentation(m), _collapse_q(cocycle_dims(sc.cx)),
         "cocycle presentation"),
    )
    out = []
    for label, pres, expected, anchor in targets:
        h = pr.hilbert(pres, top + window)
        ok = pr.verify_presentation(pres, expected, top, window)
        out.append(_check(f"m={m} Hilbert series of the {label} presentation", anchor, ok,
                          expected, h))
    inv = set(map(str, pr.invariant_cocycle_presentation(m).relations))
    unord = set(map(str, pr.unordered_presentation(m).relations))
    out.append(_check(f"m={m} invariant cocycle relations contained in unordered relations",
                      "presentation comparison", inv <= unord))
    return out


def suite_unimodality(m: int) -> list[Check]:
    if m < 2:
        return []
    out = []
    top = 6 * m
    polys = [("total", cf.ordered_poincare(m))] + \
        [(irrep_name(lam), cf.isotypic_poincare(lam, m)) for lam in IRREPS]
    for label, p in polys:
        p1 = p.at_s1()
        ok = pt.is_unimodal(p1.even_coeffs(top)) and pt.is_unimodal(p1.odd_coeffs(top))
        out.append(_check(f"m={m} even/odd Betti numbers unimodal ({label}, closed form)",
                          "unimodality of Betti numbers", ok, "unimodal",
                          f"{p1.even_coeffs(top)} / {p1.odd_coeffs(top)}"))
    if m <= 6:
        sc = symmetric_complex(m)
        for lam in IRREPS:
            p1 = poincare_isotypic(lam, sc).at_s1()
            ok = pt.is_unimodal(p1.even_coeffs(top)) and pt.is_unimodal(p1.odd_coeffs(top))
            out.append(_check(f"m={m} even/odd Betti numbers unimodal ({irrep_name(lam)}, computed)",
                              "unimodality of Betti numbers", ok))
    return out


def suite_stable(m: int) -> list[Check]:
    out = []
    if m <= 6:
        out.append(_check(f"m={m} Betti numbers agree with (CP^inf)^3 below degree 2m",
                          "stable range", stable_range_check(symmetric_complex(m).cx)))
    rng = random.Random(1000 + m)
    bad = []
    for _ in range(50):
        xs = [Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(3)]
        taus = [sum(x ** j for x in xs) for j in (1, 2, 3)]
        for k in range(13):
            if pr.newton_P(k)(*taus) != sum(x ** k for x in xs):
                bad.append((k, xs))
    out.append(_check(f"m={m} Newton polynomials reproduce power sums, k<=12",
                      "Newton polynomials", not bad, "[]", bad[:3]))
    return out


def suite_collinear(m: int) -> list[Check]:
    if m < 2:
        return []
    out = []
    for label, fn in (("collinear", cf.collinear_poincare), ("non-collinear", cf.noncollinear_poincare)):
        try:
            fn(m)
            ok = True
        except cf.IdentityFailure:
            ok = False
        out.append(_check(f"m={m} {label} product and rational forms agree",
                          f"{label} Poincare series", ok))
    return out


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "partitions": suite_partitions,
    "model": suite_model,
    "multiplicities": suite_multiplicities,
    "betti": suite_betti,
    "presentations": suite_presentations,
    "unimodality": suite_unimodality,
    "stable": suite_stable,
    "collinear": suite_collinear,
}


def expand_suites(names) -> list[str]:
    out: list[str] = []
    for n in names:
        if n == "all":
            out.extend(SUITES)
        elif n in SUITES:
            out.append(n)
        else:
            raise KeyError(n)
    return list(dict.fromkeys(out))


def _run_task(task: tuple[str, int]) -> list[dict]:
    name, m = task
    return [asdict(c) for c in SUITES[name](m)]


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suites(names, ms, jobs: int = 1) -> list[Check]:
    """Run each suite for each m; results come back in (m, suite) order."""
    tasks = [(n, m) for m in ms for n in expand_suites(names)]
    if jobs <= 1 or len(tasks) <= 1:
        results = [_run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
            results = list(pool.map(_run_task, tasks))
    return [Check(**c) for batch in results for c in batch]
