"""Figure rendering: phase-torus diagrams, bitmap exports, table charts.

All figures are written to files (SVG or PNG decided by suffix); nothing
is shown interactively.
"""

from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .lissajous import _classify_regions, decompose_phase_torus, _slanted_indices

__all__ = [
    "render_phase_torus",
    "render_fourier_bitmap",
    "write_pgm",
    "render_count_chart",
]

_PALETTE = [
    "#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3",
    "#937860", "#da8bc3", "#8c8c8c", "#ccb974", "#64b5cd",
]


def render_phase_torus(nx: int, ny: int, nz: int, path: str | Path, workers: int = 1) -> dict:
    """Fundamental domain with singular walls and faces colored by knot.

    Returns the identity -> color legend used.
    """
    regions = decompose_phase_torus(nx, ny, nz)
    ids = _classify_regions(nx, ny, nz, regions, workers)
    legend: dict[str, str] = {}
    fig, ax = plt.subplots(figsize=(5, 5))
    for reg, ident in zip(regions, ids):
        if ident not in legend:
            legend[ident] = _PALETTE[len(legend) % len(_PALETTE)]
        a, b = reg.strip
        xs = [float(a), float(b), float(b), float(a)]
        ys = [
            float(reg.wall_height(reg.below, a, nx, ny, nz)),
            float(reg.wall_height(reg.below, b, nx, ny, nz)),
            float(reg.wall_height(reg.above, b, nx, ny, nz)),
            float(reg.wall_height(reg.above, a, nx, ny, nz)),
        ]
        ax.fill(
            [x * math.pi for x in xs],
            [y * math.pi for y in ys],
            color=legend[ident],
            linewidth=0,
        )
    bound = 1.0 / nx
    for h in range(nx + 1):
        ax.plot([0, bound * math.pi], [h * math.pi / nx] * 2, "k-", lw=0.8)
    for l in _slanted_indices(nx, ny, nz):
        u0, u1 = 0.0, bound
        v0, v1 = l / ny, (nz * bound + l) / ny
        ax.plot([u0 * math.pi, u1 * math.pi], [v0 * math.pi, v1 * math.pi], "k-", lw=0.8)
    ax.set_xlim(0, bound * math.pi)
    ax.set_ylim(0, math.pi)
    ax.set_xlabel("phi_y")
    ax.set_ylabel("phi_z")
    ax.set_title(f"phase torus faces, frequencies ({nx},{ny},{nz})")
    handles = [plt.Rectangle((0, 0), 1, 1, color=c) for c in legend.values()]
    ax.legend(handles, legend.keys(), loc="upper right", fontsize=7)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return legend


def render_fourier_bitmap(spec, resolution: int, path: str | Path) -> None:
    """Wall mask of the z-phase torus as an image file."""
    from .fourier import _iter_crossings

    u = spec.phi_y / math.pi
    step = math.pi / resolution
    z = (np.arange(resolution) + 0.5) * step
    wall = np.zeros((resolution, resolution), dtype=bool)
    for kind, k, j in _iter_crossings(spec.nx, spec.ny, u):
        if kind == "I":
            mean, half = (j - u) / spec.ny, -k / spec.nx
        else:
            mean, half = j / spec.nx, -k / spec.ny
        a1 = math.sin(spec.nz1 * half * math.pi)
        a2 = math.sin(spec.nz2 * half * math.pi)
        g = a1 * np.sin(spec.nz1 * mean * math.pi + z)[None, :] + spec.amp * a2 * np.sin(
            spec.nz2 * mean * math.pi + z
        )[:, None]
        wall[:, :-1] |= g[:, :-1] * g[:, 1:] <= 0
        wall[:-1, :] |= g[:-1, :] * g[1:, :] <= 0
    img = np.where(wall, 0, 255).astype(np.uint8)
    path = Path(path)
    if path.suffix.lower() == ".pgm":
        write_pgm(img, path)
    else:
        plt.imsave(path, img[::-1], cmap="gray", vmin=0, vmax=255)


def write_pgm(img: np.ndarray, path: str | Path) -> None:
    h, w = img.shape
    with open(path, "wb") as fh:
        fh.write(f"P5 {w} {h} 255\n".encode())
        fh.write(img.tobytes())


def render_count_chart(columns: dict[str, list], path: str | Path, title: str) -> None:
    """Bar chart of one or more count columns over a shared x column."""
    keys = list(columns)
    xs = columns[keys[0]]
    fig, ax = plt.subplots(figsize=(6, 3.2))
    width = 0.8 / max(1, len(keys) - 1)
    for i, key in enumerate(keys[1:]):
        offs = (i - (len(keys) - 2) / 2) * width
        ax.bar([x + offs for x in xs], columns[key], width=width, label=key,
               color=_PALETTE[i % len(_PALETTE)])
    ax.set_xlabel(keys[0])
    ax.set_ylabel("count")
    ax.set_title(title)
    ax.legend(fontsize=8)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
