"""Closed-form results: king metric, leaper speed law, ratio distribution,
Fibonacci leapers.

Everything exact stays exact: values are Fractions, and only callers decide
when to drop to floating point. The golden ratio, the one irrational in
sight, is handled as a high-precision Decimal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

GOLDEN_DIGITS = 50  # roughly 166 bits of working precision


def require_primitive(a: int, b: int) -> None:
    """Raise with a gcd/parity diagnostic unless the (a, b) leaper is primitive."""
    if a < 1 or b < 1:
        raise ValueError(f"knight legs must be positive, got ({a}, {b})")
    g = math.gcd(a, b)
    if g != 1:
        raise ValueError(f"({a}, {b}) leaper is not primitive: gcd({a}, {b}) = {g}, not 1")
    if (a + b) % 2 == 0:
        raise ValueError(f"({a}, {b}) leaper is not primitive: leg sum {a + b} is even")


def _require_ordered_primitive(a: int, b: int) -> None:
    require_primitive(a, b)
    if not b > a:
        raise ValueError(f"speed formulas need b > a >= 1, got ({a}, {b})")


def king_distance(p) -> int:
    """Exact king move count to p: the Chebyshev norm."""
    x, y = p
    return max(abs(x), abs(y))


def knight_approx(a: int, b: int, p) -> Fraction:
    """Leading term of the (a, b) leaper's move count to p, as an exact Fraction.

    Folding p into the octant X >= Y >= 0, the count is X/b below the
    slope-a/b wedge and (X + Y)/(a + b) above it, up to a bounded error that
    the estimators measure empirically. The two branches agree on the wedge
    boundary, so the approximation is continuous.
    """
    _require_ordered_primitive(a, b)
    x, y = p
    big, small = max(abs(x), abs(y)), min(abs(x), abs(y))
    if small * b <= a * big:
        return Fraction(big, b)
    return Fraction(big + small, a + b)


def knight_velocity(a: int, b: int) -> Fraction:
    """Average speed of the (a, b) leaper relative to the king.

    Exactly 2(a+b)b^2 / (a^2 + 3b^2); the ordinary knight gets 24/13.
    """
    _require_ordered_primitive(a, b)
    return Fraction(2 * (a + b) * b * b, a * a + 3 * b * b)


def expected_ratio(a: int, b: int) -> Fraction:
    """Mean leaper/king move-count ratio: (a^2 + 3b^2) / (2(a+b)b^2).

    The exact reciprocal of knight_velocity.
    """
    _require_ordered_primitive(a, b)
    return Fraction(a * a + 3 * b * b, 2 * (a + b) * b * b)


@dataclass(frozen=True)
class RatioCdf:
    """Limit distribution of the leaper/king move-count ratio.

    Flat at 0 below t_low = 1/b, linear with slope a + b up to exactly 1 at
    t_high = 2/(a+b), then flat at 1. The jump of height a/b at t_low is the
    mass of the wedge where the ratio collapses to 1/b.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        _require_ordered_primitive(self.a, self.b)

    @property
    def t_low(self) -> Fraction:
        return Fraction(1, self.b)

    @property
    def t_high(self) -> Fraction:
        return Fraction(2, self.a + self.b)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.a + self.b)

    def value(self, t) -> Fraction:
        """Distribution value at t, exact."""
        t = Fraction(t)
        if t < self.t_low:
            return Fraction(0)
        if t > self.t_high:
            return Fraction(1)
        return self.slope * t - 1

    def left_value(self, t) -> Fraction:
        """Limit from below; differs from value() only at the jump t_low."""
        t = Fraction(t)
        if t <= self.t_low:
            return Fraction(0)
        if t > self.t_high:
            return Fraction(1)
        return self.slope * t - 1

    def mean_ratio(self) -> Fraction:
        """Integral of (1 - cdf) over [0, inf) in exact three-piece arithmetic.

        Must reproduce expected_ratio; the identity is a test target, not an
        assumption.
        """
        lo, hi, s = self.t_low, self.t_high, self.slope
        return lo + 2 * (hi - lo) - s * (hi * hi - lo * lo) / 2


def king_mean_distance(h: int) -> Fraction:
    """Exact mean king move count over the punctured box of radius h: (2h+1)/3."""
    if h < 1:
        raise ValueError(f"box radius must be >= 1, got {h}")
    return Fraction(2 * h + 1, 3)


def fibonacci(n: int) -> int:
    """F_n with F_1 = F_2 = 1, so F_n is even exactly when 3 divides n."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def fibonacci_leaper(n: int) -> tuple[int, int]:
    """Leg pair (F_{n+1}, F_{n+2}) of the n-th Fibonacci leaper.

    The first one is the ordinary chess knight. The pair is primitive exactly
    when 3 does not divide n: consecutive Fibonacci numbers are coprime, and
    the leg sum F_{n+3} is even only at indices divisible by 3.
    """
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    return fibonacci(n + 1), fibonacci(n + 2)


def fibonacci_velocity_ratio(n: int, k: int) -> Fraction:
    """Exact speed ratio of Fibonacci leaper n+k over Fibonacci leaper n.

    Approaches the k-th power of the golden ratio as n grows. Both indices
    must name primitive leapers.
    """
    if k < 1:
        raise ValueError(f"step must be >= 1, got {k}")
    for idx in (n, n + k):
        if idx < 1:
            raise ValueError(f"index must be >= 1, got {idx}")
        if idx % 3 == 0:
            raise ValueError(f"Fibonacci leaper {idx} is not primitive (index divisible by 3)")
    later = knight_velocity(*fibonacci_leaper(n + k))
    earlier = knight_velocity(*fibonacci_leaper(n))
    return later / earlier


def golden_power(k: int, digits: int = GOLDEN_DIGITS) -> Decimal:
    """The golden ratio to the k-th power, as a Decimal with `digits` precision."""
    with localcontext() as ctx:
        ctx.prec = digits
        phi = (1 + Decimal(5).sqrt()) / 2
        return phi**k


def to_decimal(q: Fraction, digits: int = GOLDEN_DIGITS) -> Decimal:
    """Decimal image of an exact Fraction at the given working precision."""
    with localcontext() as ctx:
        ctx.prec = digits
        return Decimal(q.numerator) / Decimal(q.denominator)
