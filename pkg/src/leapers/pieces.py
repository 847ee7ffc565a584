"""Chess-like pieces on the integer lattice: move sets, symmetry, primitivity."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple


class Point(NamedTuple):
    """A board square or displacement, with exact vector arithmetic."""

    x: int
    y: int

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def __add__(self, other) -> "Point":  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other) -> "Point":
        return Point(self.x - other[0], self.y - other[1])

    def max_norm(self) -> int:
        """Chebyshev norm max(|x|, |y|), the king's move count to this square."""
        return max(abs(self.x), abs(self.y))

    def one_norm(self) -> int:
        """Taxicab norm |x| + |y|."""
        return abs(self.x) + abs(self.y)


ORIGIN = Point(0, 0)


@dataclass(frozen=True)
class Piece:
    """A named, finite set of moves.

    Moves are normalized to lexicographic (x, y) order so equal pieces compare
    and serialize identically. Instances are immutable and safe to share
    across threads.
    """

    name: str
    moves: tuple[Point, ...]

    def __post_init__(self) -> None:
        moves = tuple(sorted(Point(*m) for m in self.moves))
        if not moves:
            raise ValueError("a piece needs at least one move")
        if ORIGIN in moves:
            raise ValueError(f"piece {self.name!r}: the null move (0, 0) is not allowed")
        if len(set(moves)) != len(moves):
            raise ValueError(f"piece {self.name!r}: duplicate moves")
        object.__setattr__(self, "moves", moves)

    @property
    def max_norm(self) -> int:
        """Largest Chebyshev length of any single move."""
        return max(m.max_norm() for m in self.moves)

    @property
    def max_one_norm(self) -> int:
        """Largest taxicab length of any single move."""
        return max(m.one_norm() for m in self.moves)

    def is_symmetric(self) -> bool:
        """True if the move set is closed under sign flips and coordinate swap."""
        here = set(self.moves)
        return all(
            Point(sx * m.x, sy * m.y) in here and Point(sx * m.y, sy * m.x) in here
            for m in here
            for sx in (1, -1)
            for sy in (1, -1)
        )


def symmetric_closure(generator, name: str | None = None) -> Piece:
    """Smallest symmetric piece whose moves include `generator`.

    The closure of (a, b) is {(+-a, +-b), (+-b, +-a)} deduplicated: 8 moves
    when 0 < a < b, otherwise 4.
    """
    gx, gy = generator
    if (gx, gy) == (0, 0):
        raise ValueError("cannot build a piece from the zero generator")
    moves = set()
    for sx in (1, -1):
        for sy in (1, -1):
            moves.add(Point(sx * gx, sy * gy))
            moves.add(Point(sx * gy, sy * gx))
    lo, hi = sorted((abs(gx), abs(gy)))
    return Piece(name if name is not None else f"L{lo},{hi}", tuple(moves))


def king() -> Piece:
    """One step in any of the 8 directions."""
    moves = set(symmetric_closure((1, 0)).moves) | set(symmetric_closure((1, 1)).moves)
    return Piece("K", tuple(moves))


def knight(a: int, b: int) -> Piece:
    """The (a, b) leaper: all 8 sign/swap images of the jump (a, b).

    Legs must be positive and distinct; an equal-legged jump collapses to
    4 moves and can never reach the whole board.
    """
    if a < 1 or b < 1:
        raise ValueError(f"knight legs must be positive, got ({a}, {b})")
    if a == b:
        raise ValueError(f"knight legs must differ, got ({a}, {b})")
    lo, hi = min(a, b), max(a, b)
    return symmetric_closure((lo, hi), name=f"N{lo},{hi}")


def taxicab() -> Piece:
    """One step along either axis."""
    return symmetric_closure((1, 0), name="T")


def is_primitive_knight(a: int, b: int) -> bool:
    """Whether the (a, b) leaper reaches every square: gcd(a, b) = 1 and a + b odd.

    A common leg factor traps the piece on a sublattice, and an even leg sum
    keeps it on one color of the board.
    """
    if a < 1 or b < 1:
        raise ValueError(f"knight legs must be positive, got ({a}, {b})")
    return math.gcd(a, b) == 1 and (a + b) % 2 == 1
