"""Render report figures to image files.

Each function mirrors one CLI table and writes a single figure; the tables
stay the primary output and none of this touches stdout.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .reach import DistanceField


def save_distance_heatmap(field: DistanceField, path: str) -> None:
    """Heatmap of move counts over the reporting box; unreachable squares blank."""
    h = field.radius
    data = np.ma.masked_less(field.box(h).T.astype(float), 0)
    fig, ax = plt.subplots(figsize=(6, 5))
    im = ax.imshow(data, origin="lower", extent=(-h - 0.5, h + 0.5, -h - 0.5, h + 0.5))
    fig.colorbar(im, ax=ax, label="moves")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_title(f"{field.piece.name} move counts, radius {h}")
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)


def save_velocity_curve(
    hs: list[int], velocities: list[float], closed: float | None, name: str, path: str
) -> None:
    """Measured velocity along the doubling schedule, with the limit if known."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(hs, velocities, marker="o", label="measured")
    if closed is not None:
        ax.axhline(closed, linestyle="--", color="gray", label="closed form")
    ax.set_xscale("log", base=2)
    ax.set_xlabel("box radius h")
    ax.set_ylabel("velocity")
    ax.set_title(f"average velocity of {name}")
    ax.legend()
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)


def save_cdf_overlay(
    ts: list[float], empirical: list[float], closed: list[float], name: str, path: str
) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ts, empirical, drawstyle="steps-post", label="empirical")
    ax.plot(ts, closed, linestyle="--", label="closed form")
    ax.set_xlabel("ratio t")
    ax.set_ylabel("fraction of squares")
    ax.set_title(f"move-count ratio distribution, {name} vs king")
    ax.legend()
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)


def save_fibo_trend(ns: list[int], gaps: list[float], path: str) -> None:
    """Gap between consecutive-leaper speed ratios and the golden ratio."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(ns, gaps, marker="o")
    ax.set_xlabel("leaper index n")
    ax.set_ylabel("|speed ratio - golden ratio|")
    ax.set_title("Fibonacci leaper speed ratios")
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)


def save_sumset_growth(
    ls: list[int], normalized: list[float], hull: float, name: str, path: str
) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ls, normalized, label="|region l| / l^2")
    ax.axhline(hull, linestyle="--", color="gray", label="hull area")
    ax.set_xlabel("fold count l")
    ax.set_ylabel("normalized region size")
    ax.set_title(f"sumset growth of {name}")
    ax.legend()
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)
