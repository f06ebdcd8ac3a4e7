"""Renderers for command output and atomic file writes."""
from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from dataclasses import dataclass, field


@dataclass
class Table:
    headers: list[str]
    rows: list[list] = field(default_factory=list)
    title: str = ""


def render_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def render_csv(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")  # RFC 4180 line endings
    writer.writerow(table.headers)
    for row in table.rows:
        writer.writerow(row)
    return buf.getvalue()


def render_text(table: Table) -> str:
    cells = [list(map(str, table.headers))] + [[str(c) for c in row] for row in table.rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(table.headers))]
    lines = [table.title] if table.title else []
    for j, row in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if j == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


_LATEX_ESCAPES = {"&": r"\&", "%": r"\%", "#": r"\#", "_": r"\_"}


def latex_escape(s: str) -> str:
    return "".join(_LATEX_ESCAPES.get(ch, ch) for ch in s)


def render_latex(table: Table, raw: bool = False) -> str:
    """A tabular block; ``raw`` keeps cell text as LaTeX source."""
    fix = (lambda s: s) if raw else latex_escape
    cols = "|" + "|".join("c" for _ in table.headers) + "|"
    lines = []
    if table.title:
        lines.append(f"% {table.title}")
    lines += [f"\\begin{{tabular}}{{{cols}}}", "  \\hline",
              "  " + " & ".join(fix(str(h)) for h in table.headers) + r" \\ \hline"]
    for row in table.rows:
        lines.append("  " + " & ".join(fix(str(c)) for c in row) + r" \\")
    lines += ["  \\hline", "\\end{tabular}"]
    return "\n".join(lines) + "\n"


def render(table: Table, fmt: str, payload=None, raw_latex: bool = False) -> str:
    if fmt == "json":
        return render_json(payload if payload is not None else
                           [dict(zip(table.headers, row)) for row in table.rows])
    if fmt == "csv":
        return render_csv(table)
    if fmt == "latex":
        return render_latex(table, raw=raw_latex)
    return render_text(table)


def atomic_write(path: str, text: str) -> None:
    folder = os.path.dirname(os.path.abspath(path))
    os.makedirs(folder, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.chmod(tmp, 0o666 & ~_umask())
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.remove(tmp)


def _umask() -> int:
    current = os.umask(0)
    os.umask(current)
    return current
