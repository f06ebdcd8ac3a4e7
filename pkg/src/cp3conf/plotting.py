"""Static bar charts of Betti numbers, written next to the tabular output."""
from __future__ import annotations

import os
import tempfile

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .polys import Poly2  # noqa: E402

COLORS = ("0.25", "tab:blue", "tab:orange", "tab:green")


def _series(p: Poly2, top: int, q: int) -> list[int]:
    return [int(p[(k, q)]) for k in range(top + 1)]


def betti_bars(m: int, polys: dict[str, Poly2], path: str) -> str:
    """One panel per exterior degree q = 0, 1; grouped bars per labelled polynomial."""
    top = 6 * m
    labels = list(polys)
    width = 0.8 / max(1, len(labels))
    fig, axes = plt.subplots(2, 1, figsize=(max(6.0, 0.28 * top), 5.0), sharex=True)
    for q, ax in zip((0, 1), axes):
        for i, label in enumerate(labels):
            ys = _series(polys[label], top, q)
            xs = [k + (i - (len(labels) - 1) / 2) * width for k in range(top + 1)]
            ax.bar(xs, ys, width, color=COLORS[i % len(COLORS)], label=label)
        ax.set_ylabel(f"q = {q}")
        ax.spines["top"].set_visible(False)
        ax.spines["right"].set_visible(False)
    axes[0].set_title(f"Betti numbers, m = {m}")
    axes[0].legend(frameon=False, ncol=len(labels), fontsize=8)
    axes[1].set_xlabel("degree k")
    axes[1].set_xticks(range(0, top + 1, 2))
    fig.tight_layout()
    _save(fig, path)
    plt.close(fig)
    return path


def _save(fig, path: str) -> None:
    folder = os.path.dirname(os.path.abspath(path))
    os.makedirs(folder, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=folder, suffix=".png")
    os.close(fd)
    try:
        fig.savefig(tmp, format="png", dpi=100, metadata={"Software": None})
        os.chmod(tmp, 0o666 & ~_umask())
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.remove(tmp)


def _umask() -> int:
    current = os.umask(0)
    os.umask(current)
    return current
