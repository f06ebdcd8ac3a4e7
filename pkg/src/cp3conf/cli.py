"""Command-line interface.

    cp3conf poincare --m 2
    cp3conf verify --suite all --m-range 2..4 --jobs 8
    cp3conf partitions --m 6 --k 6
    cp3conf betti --m 2 --format csv
    cp3conf presentation --which unordered --m 2

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import closed_forms as cf
from . import partitions as pt
from . import presentations as pr
from .cohomology import betti, betti_isotypic, cocycle_dims
from .formats import Table, atomic_write, render
from .polys import Poly1, Poly2
from .suites import SUITES, default_jobs, expand_suites, run_suites, symmetric_complex
from .symmetry import IRREPS, irrep_name, parse_irrep

log = logging.getLogger("cp3conf")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
FORMATS = ("text", "json", "csv", "latex")

# short names accepted by --which for compatibility with existing scripts
PRESENTATION_ALIASES = {
    "thm13": "ordered",
    "thm14": "unordered",
    "lemma44": "cocycles",
    "lemma45": "invariant-cocycles",
}


class UsageError(Exception):
    pass


# --- argument handling -----------------------------------------------------

def parse_m_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad m-range {text!r}; expected a..b") from None
    if lo > hi:
        raise UsageError(f"empty m-range {text!r}")
    return list(range(lo, hi + 1))


def resolve_ms(args, default: str | None = None) -> list[int]:
    if getattr(args, "m", None) is not None and getattr(args, "m_range", None):
        raise UsageError("give either --m or --m-range, not both")
    if getattr(args, "m", None) is not None:
        ms = [args.m]
    elif getattr(args, "m_range", None):
        ms = parse_m_range(args.m_range)
    elif default:
        ms = parse_m_range(default)
    else:
        raise UsageError("--m is required")
    if min(ms) < 1:
        raise UsageError("m must be at least 1")
    return ms


def resolve_irreps(value: str | None, default_all: bool) -> list[tuple]:
    if value is None:
        return list(IRREPS) if default_all else []
    if value == "all":
        return list(IRREPS)
    if value == "none":
        return []
    try:
        return [parse_irrep(value)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _jobs(args) -> int:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be at least 1")
    return jobs


def parallel_map(fn, items, jobs: int) -> list:
    """Ordered map; identical results for every ``jobs`` value."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as pool:
        return list(pool.map(fn, items))


def emit(args, text: str) -> None:
    if args.output:
        atomic_write(args.output, text)
    else:
        sys.stdout.write(text)


# --- poincare --------------------------------------------------------------

def out_status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _poincare_one(task) -> dict:
    m, irreps = task
    sc = symmetric_complex(m)
    total = betti(sc.cx).poincare()
    closed = cf.ordered_poincare(m)
    out = {
        "m": m,
        "polynomials": {"total": total.as_records(), "isotypic": {}},
        "closed_form": {"total": closed.as_records(), "isotypic": {}},
        "diff": {"total": (total - closed).as_records(), "isotypic": {}},
        "checks": [{"name": f"m={m} total", "anchor": "ordered Poincare closed form",
                    "status": out_status(total == closed)}],
        "text": {"total": (str(total), str(closed), out_status(total == closed))},
    }
    for lam in irreps:
        key = irrep_name(lam)
        got = betti_isotypic(lam, sc).poincare()
        out["polynomials"]["isotypic"][key] = got.as_records()
        out["text"][key] = (str(got), "", "")
        if m < 2:
            continue
        want = cf.isotypic_poincare(lam, m)
        out["closed_form"]["isotypic"][key] = want.as_records()
        out["diff"]["isotypic"][key] = (got - want).as_records()
        out["checks"].append({"name": f"m={m} {key}-part", "anchor": "isotypic Poincare closed form",
                              "status": out_status(got == want)})
        out["text"][key] = (str(got), str(want), out_status(got == want))
    return out


def cmd_poincare(args) -> int:
    ms = resolve_ms(args)
    irreps = resolve_irreps(args.isotypic, default_all=True)
    results = parallel_map(_poincare_one, [(m, irreps) for m in ms], _jobs(args))
    failed = any(c["status"] == "fail" for r in results for c in r["checks"])
    texts = [r.pop("text") for r in results]

    table = Table(["m", "part", "computed", "closed form", "status"])
    for r, text in zip(results, texts):
        for part, cells in text.items():
            table.rows.append([r["m"], part, *cells])
    payload = results[0] if len(results) == 1 else results
    emit(args, render(table, args.format, payload))
    if args.figure:
        _poincare_figures(args.figure, results)
    return EXIT_MISMATCH if failed else EXIT_OK


def _records_to_poly(records) -> Poly2:
    return Poly2({(r["t"], r["s"]): r["c"] for r in records})


def _poincare_figures(path: str, results) -> None:
    from .plotting import betti_bars

    root, ext = os.path.splitext(path)
    for r in results:
        polys = {"total": _records_to_poly(r["polynomials"]["total"])}
        for key, recs in r["polynomials"]["isotypic"].items():
            polys[f"V({key})"] = _records_to_poly(recs)
        target = path if len(results) == 1 else f"{root}-m{r['m']}{ext or '.png'}"
        betti_bars(r["m"], polys, target)


# --- verify ----------------------------------------------------------------

def cmd_verify(args) -> int:
    names = args.suite or ["all"]
    try:
        names = expand_suites(names)
    except KeyError as exc:
        raise UsageError(f"unknown suite {exc.args[0]!r}; choose from all, "
                         + ", ".join(SUITES)) from None
    ms = resolve_ms(args, default="2..4")
    start = time.perf_counter()
    checks = run_suites(names, ms, _jobs(args))
    log.info("verified %d checks in %.2fs", len(checks), time.perf_counter() - start)
    failed = [c for c in checks if not c.ok]
    table = Table(["status", "name", "anchor"],
                  [[c.status.upper(), c.name, c.anchor] for c in checks])
    payload = {
        "m_range": [ms[0], ms[-1]],
        "suites": names,
        "status": "fail" if failed else "pass",
        "checks": [{"name": c.name, "anchor": c.anchor, "status": c.status,
                    "expected": c.expected, "computed": c.computed} for c in checks],
    }
    text = render(table, args.format, payload)
    if args.format == "text":
        for c in failed:
            text += f"\nFAIL {c.name}\n  expected: {c.expected}\n  computed: {c.computed}\n"
        text += f"\n{len(checks)} checks, {len(failed)} failed\n"
    emit(args, text)
    return EXIT_MISMATCH if failed else EXIT_OK


# --- partitions ------------------------------------------------------------

def multiplicity_rows(m: int) -> list[list[str]]:
    """Rows of the S3-multiplicity table: label, V(3), V(2,1), V(1,1,1)."""
    rows = []
    for k in range(m // 2 + 1):
        rows.append([f"$E_2^{{{2 * (2 * m - 1) + 2 * k}}} \\cong E_2^{{{2 * (3 * m - 1) - 2 * k}}}$",
                     "-", "1", "-"])
    for k in range(m + 1):
        rows.append([f"$E_1^{{{2 * m - 1 + 2 * k}}} \\cong E_1^{{{6 * m - 1 - 2 * k}}}$",
                     str(k + 1), str(k + 1), "-"])
    for k in range(3 * m // 2 + 1):
        mu = pt.multiplicities(m, k)
        rows.append([f"$E_0^{{{2 * k}}} \\cong E_0^{{{6 * m - 2 * k}}}$",
                     str(mu.mu3), str(mu.mu21), str(mu.mu111)])
    return rows


def _partition_row(m: int, k: int) -> list:
    kk = min(k, 3 * m - k)
    mu = pt.multiplicities(m, kk) if kk >= 0 else None
    return [m, k, pt.p3(k), pt.p3_bounded(m, k),
            *(list(mu) if mu is not None else ["", "", ""])]


def cmd_partitions(args) -> int:
    ms = resolve_ms(args)
    if args.k is not None and args.k < 0:
        raise UsageError("--k must be non-negative")
    if args.format == "latex":
        text = ""
        for m in ms:
            table = Table(["", "$V(3)$", "$V(2,1)$", "$V(1,1,1)$"], multiplicity_rows(m),
                          title=f"S3-multiplicities, m={m}")
            text += render(table, "latex", raw_latex=True)
        emit(args, text)
        return EXIT_OK
    table = Table(["m", "k", "P3", "P3_bounded", "mu_3", "mu_2,1", "mu_1,1,1"])
    for m in ms:
        ks = [args.k] if args.k is not None else range(3 * m + 1)
        table.rows.extend(_partition_row(m, k) for k in ks)
    emit(args, render(table, args.format))
    return EXIT_OK


# --- betti -----------------------------------------------------------------

def _betti_one(task) -> list[list]:
    m, irreps = task
    sc = symmetric_complex(m)
    rows = [[m, "total", q, k, b] for q, k, b in betti(sc.cx).nonzero()]
    for lam in irreps:
        rows += [[m, irrep_name(lam), q, k, b] for q, k, b in betti_isotypic(lam, sc).nonzero()]
    return rows


def cmd_betti(args) -> int:
    ms = resolve_ms(args)
    irreps = resolve_irreps(args.isotypic, default_all=False)
    chunks = parallel_map(_betti_one, [(m, irreps) for m in ms], _jobs(args))
    table = Table(["m", "part", "q", "k", "betti"], [row for c in chunks for row in c])
    emit(args, render(table, args.format))
    if args.figure:
        from .plotting import betti_bars

        root, ext = os.path.splitext(args.figure)
        for m in ms:
            polys: dict = {}
            for mm, part, q, k, b in table.rows:
                if mm == m:
                    polys.setdefault(part, {})[(k, q)] = b
            target = args.figure if len(ms) == 1 else f"{root}-m{m}{ext or '.png'}"
            betti_bars(m, {p: Poly2(d) for p, d in polys.items()}, target)
    return EXIT_OK


# --- presentation ----------------------------------------------------------

def _collapse(dims: dict) -> Poly1:
    acc: dict = {}
    for (q, k), v in dims.items():
        acc[(k,)] = acc.get((k,), 0) + v
    return Poly1(acc)


def presentation_target(which: str, m: int):
    """(presentation, expected Hilbert series) for a --which name."""
    which = PRESENTATION_ALIASES.get(which, which)
    if which == "ordered":
        return pr.ordered_presentation(m), cf.ordered_poincare(m).at_s1()
    if which == "unordered":
        return pr.unordered_presentation(m), cf.unordered_poincare(m).at_s1()
    if which == "unordered-literal":
        return pr.unordered_presentation(m, literal=True), cf.unordered_poincare(m).at_s1()
    if which == "invariant-cocycles":
        sc = symmetric_complex(m)
        return pr.invariant_cocycle_presentation(m), _collapse(cocycle_dims(sc, (3,)))
    if which == "cocycles":
        return pr.cocycle_presentation(m), _collapse(cocycle_dims(symmetric_complex(m).cx))
    if which == "twice-punctured":
        return pr.twice_punctured_presentation(m), cf.twice_punctured_poincare(m)
    if which == "punctured-pair":
        return pr.punctured_pair_presentation(m), cf.punctured_pair_poincare(m)
    raise UsageError(f"unknown presentation {which!r}")


PRESENTATION_NAMES = ("ordered", "unordered", "unordered-literal", "invariant-cocycles",
                      "cocycles", "twice-punctured", "punctured-pair")


def cmd_presentation(args) -> int:
    ms = resolve_ms(args)
    if min(ms) < 2:
        raise UsageError("presentations are stated for m >= 2")
    if args.window < 0 or (args.degree is not None and args.degree < 0):
        raise UsageError("--degree and --window must be non-negative")
    results = []
    for m in ms:
        pres, expected = presentation_target(args.which, m)
        top = args.degree if args.degree is not None else 6 * m
        h = pr.hilbert(pres, top + args.window)
        bad = [d for d in range(top + 1) if h[d] != expected[d]]
        bad += [d for d in range(top + 1, top + args.window + 1) if h[d] != 0]
        results.append({
            "m": m, "which": args.which, "presentation": pres.name,
            "generators": [{"name": g.name, "degree": g.degree, "parity": g.parity}
                           for g in pres.generators],
            "relations": [str(r) for r in pres.relations],
            "degree": top, "window": args.window,
            "hilbert": h.coeffs(top + args.window),
            "expected": expected.truncate(top).coeffs(top + args.window),
            "mismatched_degrees": bad,
            "status": "pass" if not bad else "fail",
            "describe": pres.describe(),
        })
    failed = any(r["status"] == "fail" for r in results)
    if args.format == "json":
        for r in results:
            r.pop("describe")
        emit(args, render(Table([]), "json", results[0] if len(results) == 1 else results))
    elif args.format == "text":
        text = ""
        for r in results:
            text += r["describe"] + "\n"
            text += f"  hilbert:  {r['hilbert']}\n  expected: {r['expected']}\n"
            if r["status"] == "pass":
                text += f"  match through degree {r['degree']} (zero on the next {r['window']} degrees)\n"
            else:
                text += f"  mismatch at degrees {r['mismatched_degrees']}\n"
        emit(args, text)
    else:
        table = Table(["m", "degree", "hilbert", "expected", "status"])
        for r in results:
            for d, (h, e) in enumerate(zip(r["hilbert"], r["expected"])):
                table.rows.append([r["m"], d, h, e, "ok" if d not in r["mismatched_degrees"] else "fail"])
        emit(args, render(table, args.format))
    return EXIT_MISMATCH if failed else EXIT_OK


# --- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cp3conf",
        description="Exact cohomology of three-point configuration spaces of CP^m.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, m_range=True):
        p.add_argument("--m", type=int, help="the dimension parameter m")
        if m_range:
            p.add_argument("--m-range", help="inclusive range a..b")
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--output", help="write to this file (atomically) instead of stdout")
        p.add_argument("--jobs", type=int, default=None,
                       help="worker processes (default: $CP3CONF_JOBS or 1)")
        p.add_argument("-v", "--verbose", action="count", default=0)

    p = sub.add_parser("poincare", help="computed vs closed-form Poincare polynomials")
    common(p)
    p.add_argument("--isotypic", help="3, 2,1, 1,1,1, all (default) or none")
    p.add_argument("--figure", help="also write a bar chart PNG here")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("verify", help="run verification suites")
    common(p)
    p.add_argument("--suite", action="append",
                   help="suite name (repeatable): all, " + ", ".join(SUITES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("partitions", help="partition counts and S3 multiplicities")
    common(p)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("betti", help="nonzero Betti numbers by (q, k)")
    common(p)
    p.add_argument("--isotypic", help="add one isotypic part, or all")
    p.add_argument("--figure", help="also write a bar chart PNG here")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("presentation", help="Hilbert series of a presentation vs its target")
    common(p)
    p.add_argument("--which", required=True,
                   help=", ".join(PRESENTATION_NAMES) + " (aliases: " + ", ".join(PRESENTATION_ALIASES) + ")")
    p.add_argument("--degree", type=int, help="compare through this degree (default 6m)")
    p.add_argument("--window", type=int, default=4, help="degrees above that must vanish")
    p.set_defaults(func=cmd_presentation)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"cp3conf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
