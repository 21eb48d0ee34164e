"""Boundary figures rendered with matplotlib.

The figure shows the boundary polyline, classified points color-coded by
verdict, and the eigenvalues. SVG output omits creation dates and fixes
the hash salt so repeated runs are reproducible.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

KIND_STYLE = {
    "round": ("o", "tab:blue"),
    "flat_interior": ("s", "tab:gray"),
    "corner": ("D", "tab:red"),
    "unilateral_infinite": ("^", "tab:orange"),
    "infinite_upper": ("v", "tab:purple"),
    "ambiguous": ("*", "tab:brown"),
}


def plot_boundary(atlas, path, classified=None, eigs=None, seed=None,
                  title=None) -> None:
    matplotlib.rcParams["svg.hashsalt"] = str(seed)
    fig, ax = plt.subplots(figsize=(6.4, 6.4))
    v = atlas.vertices
    closed = np.append(v, v[:1])
    ax.plot(closed.real, closed.imag, "-", color="black", lw=1.0,
            label="boundary", zorder=1)
    if eigs is not None and len(eigs):
        eigs = np.asarray(eigs)
        ax.plot(eigs.real, eigs.imag, "x", color="tab:green", ms=7,
                label="eigenvalues", zorder=2)
    if classified:
        seen = set()
        for cp in classified:
            kind = cp.verdict.kind if cp.verdict is not None else "ambiguous"
            marker, color = KIND_STYLE.get(kind, ("o", "tab:cyan"))
            label = kind if kind not in seen else None
            seen.add(kind)
            ax.plot([cp.point.real], [cp.point.imag], marker, color=color,
                    ms=8, mfc="none", label=label, zorder=3)
    ax.set_aspect("equal")
    ax.grid(True, alpha=0.3)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    if title:
        ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    fig.savefig(path, metadata={"Date": None})
    plt.close(fig)
