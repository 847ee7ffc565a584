"""Empirical counterparts of the closed forms: box velocities, relative
velocities over reachable regions, residuals of the leading-term distance,
small-box bounds, ratio distributions, and sumset growth fits.

Estimators consume immutable distance fields; every mean is accumulated in
exact integer/rational arithmetic, and floating point appears only in the
final convenience values.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .formulas import RatioCdf, require_primitive
from .pieces import Piece, Point, knight
from .reach import DistanceField, ShellDecomposition, compute_field, shells


class UnreachableCellError(RuntimeError):
    """A square that the estimator needs is unreachable: the piece is not
    primitive over the region it was asked to cover."""


class Normalizer(Enum):
    BOX = "box"  # full box, origin included: (2h+1)^2 squares
    PUNCTURED = "punctured"  # origin removed: 4h(h+1) squares


def _checked_box(field: DistanceField, h: int) -> np.ndarray:
    sub = field.box(h)
    if (sub < 0).any():
        ix, iy = np.argwhere(sub < 0)[0]
        p = Point(int(ix) - h, int(iy) - h)
        raise UnreachableCellError(
            f"{field.piece.name} cannot reach {tuple(p)} inside the box of radius {h}"
        )
    return sub


def _exact_sum(values: np.ndarray) -> int:
    # values are move counts <= ~10^3 over <= ~10^7 squares: an int64
    # accumulator is exact with room to spare
    return int(values.sum(dtype=np.int64))


@dataclass(frozen=True)
class VelocityEstimate:
    """Mean move count over a box and the speed it implies."""

    piece_name: str
    h: int
    normalizer: Normalizer
    mean_distance: Fraction

    @property
    def velocity_exact(self) -> Fraction:
        return Fraction(2 * self.h, 3) / self.mean_distance

    @property
    def velocity(self) -> float:
        return float(self.velocity_exact)


def empirical_velocity(
    piece: Piece,
    h: int,
    normalizer: Normalizer = Normalizer.BOX,
    *,
    field: DistanceField | None = None,
) -> VelocityEstimate:
    """Measured speed of a primitive piece over the box of radius h.

    The mean move count is exact; the velocity is (2h/3) over that mean, so
    a piece as fast as the king scores 1 in the limit. Pass a precomputed
    field (radius >= h) to amortize the search over several h values.
    """
    if h < 1:
        raise ValueError(f"box radius must be >= 1, got {h}")
    if field is None:
        field = compute_field(piece, h)
    elif field.piece != piece or field.radius < h:
        raise ValueError("field does not cover this piece and radius")
    total = _exact_sum(_checked_box(field, h))
    count = (2 * h + 1) ** 2 if normalizer is Normalizer.BOX else 4 * h * (h + 1)
    return VelocityEstimate(piece.name, h, normalizer, Fraction(total, count))


@dataclass(frozen=True)
class RelativeVelocityEstimate:
    """Mean move count of a target piece over a reference piece's region."""

    reference_name: str
    target_name: str
    h: int
    region_size: int
    mean_distance: Fraction

    @property
    def velocity_exact(self) -> Fraction:
        return Fraction(2 * self.h, 3) / self.mean_distance

    @property
    def velocity(self) -> float:
        return float(self.velocity_exact)


def relative_velocity(
    reference: Piece,
    target: Piece,
    h: int,
    *,
    reference_decomposition: ShellDecomposition | None = None,
    target_field: DistanceField | None = None,
) -> RelativeVelocityEstimate:
    """Measured speed of `target` over the h-step reachable region of `reference`.

    The region is the h-fold sumset of the reference moves with the origin
    adjoined. The prefactor 2h/3 matches the box estimator (in two dimensions
    the mean over the growing regions is 2h/3 + O(1)), so a piece's speed
    relative to itself tends to 1 and taking the king as reference reproduces
    the box estimate exactly.
    """
    if h < 1:
        raise ValueError(f"region index must be >= 1, got {h}")
    dec = reference_decomposition
    if dec is None:
        dec = shells(reference, h)
    elif dec.piece != reference or dec.max_index < h:
        raise ValueError("decomposition does not cover this reference and index")

    r = h * reference.max_norm
    e = dec.extent
    levels = dec.levels[e - r : e + r + 1, e - r : e + r + 1]

    if target_field is None:
        target_field = compute_field(target, r)
    elif target_field.piece != target or target_field.radius < r:
        raise ValueError("target field does not cover the reference region")
    tgt = target_field.box(r)

    region = (levels >= 0) & (levels <= h)
    values = tgt[region]
    if (values < 0).any():
        raise UnreachableCellError(
            f"{target.name} cannot reach every square of {reference.name}'s region {h}"
        )
    size = int(region.sum())
    mean = Fraction(_exact_sum(values), size)
    return RelativeVelocityEstimate(reference.name, target.name, h, size, mean)


@dataclass(frozen=True)
class ResidualReport:
    """Worst absolute gap between exact move counts and the leading term."""

    a: int
    b: int
    h: int
    max_abs_residual: Fraction
    argmax: Point


def residual_report(
    a: int, b: int, h: int, *, field: DistanceField | None = None
) -> ResidualReport:
    """Max over the radius-h box of |exact move count - leading term|.

    The two branches of the leading term have denominators b and a + b, so
    the residual maxima are found as integer maxima of |count*b - X| and
    |count*(a+b) - (X+Y)| and only then turned into Fractions: no floating
    point, no ties lost to rounding.
    """
    require_primitive(a, b)
    if not b > a:
        raise ValueError(f"residuals need b > a >= 1, got ({a}, {b})")
    if field is None:
        field = compute_field(knight(a, b), h)
    counts = _checked_box(field, h).astype(np.int64)

    axis = np.abs(np.arange(-h, h + 1, dtype=np.int64))
    big = np.maximum(axis[:, None], axis[None, :])
    small = np.minimum(axis[:, None], axis[None, :])
    wedge = small * b <= a * big  # where the X/b branch applies

    num_low = np.where(wedge, np.abs(counts * b - big), -1)
    num_high = np.where(wedge, -1, np.abs(counts * (a + b) - (big + small)))

    def peak(nums: np.ndarray, den: int) -> tuple[Fraction, Point]:
        flat = int(nums.argmax())
        ix, iy = divmod(flat, nums.shape[1])
        return Fraction(int(nums[ix, iy]), den), Point(ix - h, iy - h)

    low_val, low_at = peak(num_low, b)
    high_val, high_at = peak(num_high, a + b)
    if low_val >= high_val:
        return ResidualReport(a, b, h, low_val, low_at)
    return ResidualReport(a, b, h, high_val, high_at)


def small_box_constant(a: int, b: int, *, field: DistanceField | None = None) -> Fraction:
    """Max move count over the small box of radius a + b, divided by b.

    The uniform boundedness of this constant across leg pairs is what makes
    the leading-term error O(b); measured here, never assumed.
    """
    require_primitive(a, b)
    if not b > a:
        raise ValueError(f"the small-box bound needs b > a >= 1, got ({a}, {b})")
    if field is None:
        field = compute_field(knight(a, b), a + b)
    counts = _checked_box(field, a + b)
    return Fraction(int(counts.max()), b)


@dataclass(frozen=True, eq=False)
class CdfEstimate:
    """Empirical distribution of leaper/king move-count ratios over a punctured box."""

    a: int
    b: int
    h: int
    ratios: np.ndarray  # sorted, origin excluded

    @property
    def sample_size(self) -> int:
        return int(self.ratios.size)

    def query(self, t: float) -> float:
        """Fraction of squares whose ratio is <= t."""
        return float(np.searchsorted(self.ratios, t, side="right")) / self.ratios.size

    def sup_gap(self, closed: RatioCdf, ts) -> float:
        """Largest |empirical - closed| over the probe points ts."""
        return max(abs(self.query(float(t)) - float(closed.value(Fraction(t)))) for t in ts)

    def sup_gap_exact(self, closed: RatioCdf) -> float:
        """Exact sup over all t of |empirical - closed| (Kolmogorov style).

        Both curves are step or piecewise-linear, so the sup is attained at a
        sample value or a breakpoint, approached from one side or the other;
        it suffices to probe those points with both one-sided limits. This
        gap does not shrink to zero with h: the limit law has an atom at
        t_low whose mass the finite samples spread just above it, so the
        pointwise gap there saturates near a/b. Use a fixed probe grid
        (sup_gap) to measure convergence; this exact version exists for
        diagnosis.
        """
        n = self.ratios.size
        t_low, t_high = float(closed.t_low), float(closed.t_high)
        slope = self.a + self.b
        cands = np.union1d(self.ratios, [t_low, t_high])
        emp_at = np.searchsorted(self.ratios, cands, side="right") / n
        emp_before = np.searchsorted(self.ratios, cands, side="left") / n
        line = np.minimum(slope * cands - 1.0, 1.0)
        ref_at = np.where(cands < t_low, 0.0, line)
        ref_before = np.where(cands <= t_low, 0.0, line)
        return float(
            max(np.abs(emp_at - ref_at).max(), np.abs(emp_before - ref_before).max())
        )


def empirical_cdf(
    a: int, b: int, h: int, *, field: DistanceField | None = None
) -> CdfEstimate:
    """Empirical ratio distribution of the (a, b) leaper over the radius-h box.

    The ratio is undefined at the origin, so the origin is excluded; the
    omission of one square vanishes in the limit. Division is the only
    inexact step and the move counts are far below 2^53, so each ratio is
    correctly rounded.
    """
    require_primitive(a, b)
    if not b > a:
        raise ValueError(f"the ratio law needs b > a >= 1, got ({a}, {b})")
    if field is None:
        field = compute_field(knight(a, b), h)
    counts = _checked_box(field, h)

    axis = np.abs(np.arange(-h, h + 1))
    norms = np.maximum(axis[:, None], axis[None, :])
    off_origin = norms > 0
    ratios = counts[off_origin] / norms[off_origin]
    ratios.sort()
    return CdfEstimate(a, b, h, ratios)


def khovanskii_fit(
    piece: Piece, h: int, *, decomposition: ShellDecomposition | None = None
) -> float:
    """Region size |h-step reachable set| divided by h^2.

    The measured leading coefficient of the quadratic sumset growth; should
    land near the hull area of the move set.
    """
    if h < 20:
        raise ValueError(f"the growth fit needs h >= 20, got {h}")
    dec = decomposition
    if dec is None:
        dec = shells(piece, h)
    elif dec.piece != piece or dec.max_index < h:
        raise ValueError("decomposition does not cover this piece and index")
    size = dec.cumulative_sizes()[h]
    return size / float(h * h)
