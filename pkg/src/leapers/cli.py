"""Command-line front end: deterministic experiment tables as CSV or JSON.

Output is byte-stable for a fixed configuration: rows come in a fixed order,
reals are printed with 10 significant digits, and exact rationals are printed
as "p/q" so nothing is lost to rounding. Figures are an optional extra and
always go to files, never to stdout.

Exit codes: 0 success, 2 invalid configuration, 3 internal invariant
violation (for example an unreachable square where primitivity was asserted).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import estimators, formulas, pieces, reach

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INVARIANT = 3


def format_real(x) -> str:
    """Fixed 10-significant-digit rendering used for every real-valued cell."""
    return f"{float(x):.10g}"


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_piece(tokens: list[str]):
    """Piece spec tokens: king | taxicab | knight A B | fibo N.

    Returns (piece, legs) where legs is the (a, b) pair for knight-type
    pieces and None otherwise.
    """
    if not tokens:
        raise ValueError("empty piece spec")
    kind, args = tokens[0], tokens[1:]

    def ints(n: int) -> list[int]:
        if len(args) != n:
            raise ValueError(f"piece {kind!r} takes {n} integer argument(s), got {len(args)}")
        try:
            return [int(t) for t in args]
        except ValueError:
            raise ValueError(f"piece {kind!r} arguments must be integers: {args}") from None

    if kind == "king":
        ints(0)
        return pieces.king(), None
    if kind == "taxicab":
        ints(0)
        return pieces.taxicab(), None
    if kind == "knight":
        a, b = ints(2)
        piece = pieces.knight(a, b)
        return piece, (min(a, b), max(a, b))
    if kind == "fibo":
        (n,) = ints(1)
        legs = formulas.fibonacci_leaper(n)
        return pieces.knight(*legs), legs
    raise ValueError(f"unknown piece kind {kind!r} (expected king, taxicab, knight, fibo)")


def doubling_schedule(radius: int) -> list[int]:
    """Ascending radii radius, radius/2, radius/4, ... so one run shows convergence."""
    out = []
    h = radius
    while h >= 8 and len(out) < 8:
        out.append(h)
        h //= 2
    if not out:
        out = [radius]
    return out[::-1]


def base_config(args, piece) -> dict:
    config = {
        "command": args.command,
        "piece": piece.name,
        "deterministic": True,
    }
    if getattr(args, "radius", None) is not None:
        config["radius"] = args.radius
    return config


def cmd_distance(args):
    piece, _ = parse_piece(args.piece)
    field = reach.compute_field(piece, args.radius, args.margin)
    header = ["x", "y", "distance"]
    rows = [[x, y, d] for x, y, d in field.rows()]
    config = base_config(args, piece)
    config["margin"] = field.margin

    def plot(path):
        from . import plots

        plots.save_distance_heatmap(field, path)

    return config, header, rows, plot


def cmd_velocity(args):
    piece, legs = parse_piece(args.piece)
    if legs is not None:
        formulas.require_primitive(*legs)
    closed: Fraction | None
    if piece.name == "K":
        closed = Fraction(1)
    elif legs is not None:
        closed = formulas.knight_velocity(*legs)
    else:
        closed = None  # no closed form asserted for the taxicab

    normalizer = estimators.Normalizer(args.normalizer)
    schedule = doubling_schedule(args.radius)
    field = reach.compute_field(piece, args.radius, args.margin)

    header = ["h", "mean_distance", "velocity", "closed_form_value", "abs_error"]
    rows = []
    for h in schedule:
        est = estimators.empirical_velocity(piece, h, normalizer, field=field)
        if closed is None:
            closed_cell, err_cell = "", ""
        else:
            closed_cell = format_fraction(closed)
            err_cell = format_real(abs(est.velocity_exact - closed))
        rows.append(
            [h, format_fraction(est.mean_distance), format_real(est.velocity), closed_cell, err_cell]
        )
    config = base_config(args, piece)
    config["margin"] = field.margin
    config["normalizer"] = normalizer.value

    def plot(path):
        from . import plots

        plots.save_velocity_curve(
            schedule,
            [float(r[2]) for r in rows],
            None if closed is None else float(closed),
            piece.name,
            path,
        )

    return config, header, rows, plot


def cmd_cdf(args):
    piece, legs = parse_piece(args.piece)
    if legs is None:
        raise ValueError("the cdf command needs a knight-type piece (knight A B or fibo N)")
    formulas.require_primitive(*legs)
    a, b = legs
    closed = formulas.RatioCdf(a, b)
    field = reach.compute_field(piece, args.radius, args.margin)
    est = estimators.empirical_cdf(a, b, args.radius, field=field)

    n = args.grid_resolution
    t_max = float(closed.t_high) + 0.1
    ts = [i * t_max / n for i in range(n + 1)]

    header = ["t", "empirical", "closed_form"]
    rows = [
        [format_real(t), format_real(est.query(t)), format_real(closed.value(Fraction(t)))]
        for t in ts
    ]
    rows.append(["sup_gap", format_real(est.sup_gap(closed, ts)), ""])
    config = base_config(args, piece)
    config["margin"] = field.margin
    config["grid_resolution"] = n

    def plot(path):
        from . import plots

        plots.save_cdf_overlay(
            ts, [float(r[1]) for r in rows[:-1]], [float(r[2]) for r in rows[:-1]], piece.name, path
        )

    return config, header, rows, plot


def cmd_fibo(args):
    phi = formulas.golden_power(1)
    header = [
        "n",
        "a",
        "b",
        "primitive",
        "velocity",
        "velocity_decimal",
        "ratio_to_previous_primitive",
        "abs_gap_to_golden",
    ]
    rows = []
    plot_ns, plot_gaps = [], []
    previous: tuple[int, Fraction] | None = None  # (index, velocity) of last primitive
    for n in range(1, args.max_index + 1):
        a, b = formulas.fibonacci_leaper(n)
        primitive = n % 3 != 0
        if not primitive:
            rows.append([n, a, b, "false", "", "", "", ""])
            continue
        v = formulas.knight_velocity(a, b)
        ratio_cell, gap_cell = "", ""
        if previous is not None:
            ratio = v / previous[1]
            gap = abs(formulas.to_decimal(ratio) - phi)
            ratio_cell = format_real(ratio)
            gap_cell = format_real(gap)
            plot_ns.append(n)
            plot_gaps.append(float(gap))
        previous = (n, v)
        rows.append([n, a, b, "true", format_fraction(v), format_real(v), ratio_cell, gap_cell])
    config = {"command": "fibo", "max_index": args.max_index, "deterministic": True}

    def plot(path):
        from . import plots

        plots.save_fibo_trend(plot_ns, plot_gaps, path)

    return config, header, rows, plot


def cmd_sumset(args):
    piece, _ = parse_piece(args.piece)
    dec = reach.shells(piece, args.radius)
    hull = reach.hull_area(piece)
    sizes = dec.sizes()
    cumulative = dec.cumulative_sizes()

    header = ["l", "region_size", "shell_size", "region_over_l_squared", "hull_area"]
    rows = [
        [l, cumulative[l], sizes[l], format_real(cumulative[l] / l**2), format_fraction(hull)]
        for l in range(1, args.radius + 1)
    ]
    config = base_config(args, piece)

    def plot(path):
        from . import plots

        plots.save_sumset_growth(
            [r[0] for r in rows], [float(r[3]) for r in rows], float(hull), piece.name, path
        )

    return config, header, rows, plot


COMMANDS = {
    "distance": cmd_distance,
    "velocity": cmd_velocity,
    "cdf": cmd_cdf,
    "fibo": cmd_fibo,
    "sumset": cmd_sumset,
}


def write_output(args, config: dict, header: list[str], rows: list[list]) -> None:
    out = sys.stdout if args.out is None else open(args.out, "w", encoding="utf-8", newline="")
    try:
        if args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
        else:
            payload = {"config": config, "rows": [dict(zip(header, row)) for row in rows]}
            out.write(json.dumps(payload, indent=2))
            out.write("\n")
    finally:
        if out is not sys.stdout:
            out.close()


def add_common_flags(sub, *, with_piece=True, with_radius=True, radius_required=True):
    if with_piece:
        sub.add_argument(
            "--piece",
            nargs="+",
            required=True,
            metavar="SPEC",
            help="king | taxicab | knight A B | fibo N",
        )
    if with_radius:
        sub.add_argument("--radius", type=int, required=radius_required, help="reporting box radius h")
    sub.add_argument("--margin", type=int, default=None, help="override the search padding")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", default=None, metavar="PATH", help="output file (default stdout)")
    sub.add_argument("--plot", default=None, metavar="PATH", help="also render a figure to PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leapers",
        description="Exact move-count experiments for chess-like lattice pieces.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("distance", help="dump the exact distance field over a box")
    add_common_flags(sub)

    sub = subs.add_parser("velocity", help="measured velocity along a doubling schedule")
    add_common_flags(sub)
    sub.add_argument("--normalizer", choices=("box", "punctured"), default="box")

    sub = subs.add_parser("cdf", help="empirical vs closed-form ratio distribution")
    add_common_flags(sub)
    sub.add_argument("--grid-resolution", type=int, default=100, metavar="N")

    sub = subs.add_parser("fibo", help="Fibonacci leaper speed table")
    add_common_flags(sub, with_piece=False, with_radius=False)
    sub.add_argument("--max-index", type=int, default=12, metavar="N")

    sub = subs.add_parser("sumset", help="fold-by-fold region growth and hull area")
    add_common_flags(sub)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config, header, rows, plot = COMMANDS[args.command](args)
        config["format"] = args.format
        write_output(args, config, header, rows)
        if args.plot is not None:
            plot(args.plot)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except estimators.UnreachableCellError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
