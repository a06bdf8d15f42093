"""Matplotlib figures written next to the CLI's delimited output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def betti_figure(betti, path, title=None):
    fig, ax = plt.subplots(figsize=(5, 3.2))
    dims = list(range(len(betti)))
    ax.bar(dims, betti, color="0.35", width=0.6)
    ax.set_xticks(dims)
    ax.set_xlabel("dimension q")
    ax.set_ylabel("b_q (mod 2)")
    if title:
        ax.set_title(title)
    ax.yaxis.get_major_locator().set_params(integer=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def scaling_figure(rows, path):
    """Log-log timings against simplex count, one line per family and stage."""
    fig, ax = plt.subplots(figsize=(6, 4))
    families = sorted({r["family"] for r in rows})
    markers = "osd^v"
    for i, fam in enumerate(families):
        pts = sorted((r for r in rows if r["family"] == fam), key=lambda r: r["simplices"])
        m = [r["simplices"] for r in pts]
        ax.loglog(m, [r["contraction_s"] for r in pts], marker=markers[i % len(markers)],
                  label=f"{fam}: contraction")
        ax.loglog(m, [r["verify_s"] for r in pts], marker=markers[i % len(markers)],
                  linestyle="--", label=f"{fam}: verify")
    ax.set_xlabel("number of simplices m")
    ax.set_ylabel("seconds")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
