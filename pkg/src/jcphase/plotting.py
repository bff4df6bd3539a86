"""Optional figure rendering for CLI artifacts.

Figures are a convenience layer over the delimited data files; the data
path never depends on matplotlib state.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = ["save_curves", "save_wigner_heatmap"]


def save_curves(times, curves: dict, path: str, xlabel: str = "t", title: str | None = None,
                hlines: dict | None = None):
    """Line plot of one or more named curves against time."""
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    for label, values in curves.items():
        ax.plot(times, values, lw=1.2, label=label)
    for label, y in (hlines or {}).items():
        ax.axhline(y, color="grey", ls="--", lw=0.9, label=label)
    ax.set_xlabel(xlabel)
    ax.grid(alpha=0.3)
    if title:
        ax.set_title(title)
    ax.legend(frameon=False, fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_wigner_heatmap(grid, path: str):
    """Heatmap of a 2D Wigner grid (other axes must be fixed)."""
    varying = [a for a in grid.axes if a.count > 1]
    if len(varying) != 2:
        raise ValueError("heatmap needs exactly two varying axes")
    shape = tuple(a.count for a in grid.axes)
    values = grid.values.reshape(shape).squeeze()
    x, y = varying[0], varying[1]
    fig, ax = plt.subplots(figsize=(5.6, 4.6))
    vmax = float(np.abs(values).max()) or 1.0
    mesh = ax.pcolormesh(
        np.linspace(x.start, x.stop, x.count),
        np.linspace(y.start, y.stop, y.count),
        values.T,
        cmap="RdBu_r",
        vmin=-vmax,
        vmax=vmax,
        shading="auto",
    )
    ax.set_xlabel(x.name)
    ax.set_ylabel(y.name)
    ax.set_title(f"{grid.kind}, t = {grid.t:g}")
    fig.colorbar(mesh, ax=ax, label="W")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
