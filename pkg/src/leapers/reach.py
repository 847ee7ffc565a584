"""Exact minimum-move distance fields, explicit sumset folding, and growth.

The breadth-first engine here is the ground truth that every closed form in
the package is checked against: it never takes an algebraic shortcut. Fields
are dense grids because the workloads sweep whole boxes anyway, and a flat
frontier expansion over a dense grid is both the simplest and the fastest
exact method at the radii we use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .pieces import Piece, Point

UNREACHABLE = -1  # grid sentinel; serialized as -1 in CSV dumps


def default_margin(piece: Piece) -> int:
    """Padding added around the reporting box before running the search.

    Shortest paths may detour outside the box containing their endpoints.
    For an (a, b) leaper the necessary detours stay within taxicab range
    a + b of the target, so we pad by twice the longest taxicab move length;
    the margin-stability tests validate this empirically instead of trusting
    it blindly.
    """
    return 2 * piece.max_one_norm


@dataclass(frozen=True, eq=False)
class DistanceField:
    """Dense grid of exact minimum move counts around the origin.

    ``grid[ix, iy]`` holds the move count of the square
    ``(ix - extent, iy - extent)`` where ``extent = radius + margin``, or
    ``UNREACHABLE`` when no path confined to the padded box reaches it.
    Queries are restricted to the reporting box of ``radius``; the margin
    cells exist only so in-box distances are not distorted by the boundary.
    A finished field is immutable and safe to query from many threads.
    """

    piece: Piece
    radius: int
    margin: int
    grid: np.ndarray

    @property
    def extent(self) -> int:
        return self.radius + self.margin

    def distance(self, p) -> int | None:
        """Exact move count to ``p``, or None when the square is unreachable.

        Raises ValueError outside the reporting box: an out-of-box query is a
        caller bug, not an unreachable square.
        """
        x, y = p
        if max(abs(x), abs(y)) > self.radius:
            raise ValueError(
                f"({x}, {y}) is outside the reporting box of radius {self.radius}"
            )
        v = int(self.grid[x + self.extent, y + self.extent])
        return None if v < 0 else v

    def box(self, h: int) -> np.ndarray:
        """Read-only view of the raw values over the sub-box of radius h."""
        if not 0 <= h <= self.radius:
            raise ValueError(f"box radius {h} not in [0, {self.radius}]")
        c = self.extent
        return self.grid[c - h : c + h + 1, c - h : c + h + 1]

    def rows(self) -> Iterator[tuple[int, int, int]]:
        """(x, y, value) over the reporting box, lexicographic by (x, y).

        Unreachable squares carry -1, matching the CSV dump format.
        """
        h = self.radius
        b = self.box(h)
        for ix in range(2 * h + 1):
            for iy in range(2 * h + 1):
                yield ix - h, iy - h, int(b[ix, iy])


def compute_field(
    piece: Piece,
    radius: int,
    margin: int | None = None,
    *,
    max_level: int | None = None,
) -> DistanceField:
    """Exact move counts for every square of the padded box, by frontier expansion.

    Classic breadth-first search, vectorized: the frontier is an array of
    flat grid indices, each step adds every move offset, drops squares seen
    before, and stamps the new ones with the current level. A blocked ring of
    width ``piece.max_norm`` around the padded box keeps index arithmetic
    from wrapping, and doubles as the confinement boundary. ``max_level``
    optionally stops the search early; deeper squares then stay UNREACHABLE.
    """
    if radius < 1:
        raise ValueError(f"radius must be >= 1, got {radius}")
    if margin is None:
        margin = default_margin(piece)
    if margin < 0:
        raise ValueError(f"margin must be >= 0, got {margin}")

    extent = radius + margin
    pad = piece.max_norm
    side = 2 * extent + 1 + 2 * pad
    center = extent + pad

    dist = np.full((side, side), UNREACHABLE, dtype=np.int32)
    closed = np.zeros((side, side), dtype=bool)
    closed[:pad, :] = True
    closed[side - pad :, :] = True
    closed[:, :pad] = True
    closed[:, side - pad :] = True

    flat_dist = dist.reshape(-1)
    flat_closed = closed.reshape(-1)
    offsets = np.asarray([mx * side + my for mx, my in piece.moves], dtype=np.int64)

    start = center * side + center
    flat_dist[start] = 0
    flat_closed[start] = True
    frontier = np.asarray([start], dtype=np.int64)

    level = 0
    while frontier.size and (max_level is None or level < max_level):
        level += 1
        candidates = (frontier[:, None] + offsets).reshape(-1)
        candidates = candidates[~flat_closed[candidates]]
        if candidates.size == 0:
            break
        frontier = np.unique(candidates)
        flat_closed[frontier] = True
        flat_dist[frontier] = level

    inner = dist[pad : side - pad, pad : side - pad]
    inner.flags.writeable = False
    return DistanceField(piece, radius, margin, inner)


def fold_sumsets(piece: Piece, up_to: int) -> Iterator[tuple[int, set[Point]]]:
    """Yield (h, exact h-fold sumset) for h = 1..up_to by iterated Minkowski addition.

    Deliberately plain set arithmetic: this is the independent oracle the
    search engine is checked against, so clarity beats speed. Quadratic per
    step, fine up to a few dozen folds.
    """
    if up_to < 1:
        raise ValueError(f"up_to must be >= 1, got {up_to}")
    moves = [Point(*m) for m in piece.moves]
    current: set[Point] = set(moves)
    yield 1, set(current)
    for h in range(2, up_to + 1):
        current = {p + m for p in current for m in moves}
        yield h, set(current)


def fold_sumset(piece: Piece, h: int) -> set[Point]:
    """The exact h-fold sumset: every sum of exactly h moves."""
    result: set[Point] = set()
    for _, points in fold_sumsets(piece, h):
        result = points
    return result


@dataclass(frozen=True, eq=False)
class ShellDecomposition:
    """Level sets of the move-count metric with the idle move adjoined.

    Shell ``l`` holds the squares first reachable in exactly ``l`` moves;
    the union of shells 0..l is the l-fold sumset of the move set with the
    origin added. ``levels`` stores the move count per square of the bounding
    grid, with -1 beyond ``max_index``.
    """

    piece: Piece
    max_index: int
    levels: np.ndarray

    @property
    def extent(self) -> int:
        return (self.levels.shape[0] - 1) // 2

    def sizes(self) -> list[int]:
        """Shell cardinalities for indices 0..max_index."""
        reached = self.levels[self.levels >= 0]
        counts = np.bincount(reached, minlength=self.max_index + 1)
        return [int(c) for c in counts[: self.max_index + 1]]

    def cumulative_sizes(self) -> list[int]:
        """Region cardinalities |shells 0..l| for l = 0..max_index."""
        out, total = [], 0
        for s in self.sizes():
            total += s
            out.append(total)
        return out

    def shell(self, index: int) -> set[Point]:
        if not 0 <= index <= self.max_index:
            raise ValueError(f"shell index {index} not in [0, {self.max_index}]")
        e = self.extent
        xs, ys = np.nonzero(self.levels == index)
        return {Point(int(x) - e, int(y) - e) for x, y in zip(xs, ys)}


def shells(piece: Piece, h: int) -> ShellDecomposition:
    """Shell decomposition of the reachable regions up to index h.

    Adjoining the idle move makes region l the set of squares needing at most
    l real moves, so shells are exactly the level sets of the plain search.
    Every square of shell l has a shortest path whose partial sums stay
    within Chebyshev radius l * (longest move), so the bounding grid needs no
    extra margin.
    """
    if h < 1:
        raise ValueError(f"shell count must be >= 1, got {h}")
    field = compute_field(piece, radius=h * piece.max_norm, margin=0, max_level=h)
    return ShellDecomposition(piece, h, field.grid)


def hull_area(piece: Piece) -> Fraction:
    """Exact area of the convex hull of the move set.

    Monotone-chain hull over the integer move coordinates followed by the
    shoelace sum; everything stays in integers, so the Fraction result is
    exact. Collinear move sets have no area and are rejected.
    """
    pts = sorted(set(piece.moves))
    if len(pts) < 3:
        raise ValueError("need at least 3 distinct moves for a two-dimensional hull")

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def half_chain(points):
        out: list[Point] = []
        for p in points:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half_chain(pts)
    upper = half_chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise ValueError("moves are collinear, the hull has no area")

    twice_area = 0
    for i, (x0, y0) in enumerate(hull):
        x1, y1 = hull[(i + 1) % len(hull)]
        twice_area += x0 * y1 - x1 * y0
    return Fraction(abs(twice_area), 2)
