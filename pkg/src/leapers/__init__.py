"""Exact move-count geometry for chess-like lattice pieces.

Distance fields by breadth-first search, explicit sumset folding, hull
areas, closed-form speed laws, and the estimators that tie the two sides
together.
"""

from .estimators import (
    CdfEstimate,
    Normalizer,
    RelativeVelocityEstimate,
    ResidualReport,
    UnreachableCellError,
    VelocityEstimate,
    empirical_cdf,
    empirical_velocity,
    khovanskii_fit,
    small_box_constant,
    relative_velocity,
    residual_report,
)
from .formulas import (
    RatioCdf,
    expected_ratio,
    fibonacci,
    fibonacci_leaper,
    fibonacci_velocity_ratio,
    golden_power,
    king_distance,
    king_mean_distance,
    knight_approx,
    knight_velocity,
    require_primitive,
    to_decimal,
)
from .pieces import (
    ORIGIN,
    Piece,
    Point,
    is_primitive_knight,
    king,
    knight,
    symmetric_closure,
    taxicab,
)
from .reach import (
    UNREACHABLE,
    DistanceField,
    ShellDecomposition,
    compute_field,
    default_margin,
    fold_sumset,
    fold_sumsets,
    hull_area,
    shells,
)

__version__ = "0.1.0"

__all__ = [
    "CdfEstimate",
    "DistanceField",
    "Normalizer",
    "ORIGIN",
    "Piece",
    "Point",
    "RatioCdf",
    "RelativeVelocityEstimate",
    "ResidualReport",
    "ShellDecomposition",
    "UNREACHABLE",
    "UnreachableCellError",
    "VelocityEstimate",
    "compute_field",
    "default_margin",
    "empirical_cdf",
    "empirical_velocity",
    "expected_ratio",
    "fibonacci",
    "fibonacci_leaper",
    "fibonacci_velocity_ratio",
    "fold_sumset",
    "fold_sumsets",
    "golden_power",
    "hull_area",
    "is_primitive_knight",
    "khovanskii_fit",
    "king",
    "king_distance",
    "king_mean_distance",
    "knight",
    "knight_approx",
    "knight_velocity",
    "small_box_constant",
    "relative_velocity",
    "require_primitive",
    "residual_report",
    "shells",
    "symmetric_closure",
    "taxicab",
    "to_decimal",
]
