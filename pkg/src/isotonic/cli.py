"""
Command-line front end

Exit status is 0 on success, 1 when an identity or a numeric check fails
(or the potential is singular in the grid window), and 2 on usage errors.
"""

from __future__ import annotations
import argparse
import csv
from dataclasses import dataclass
from fractions import Fraction
import json
import logging
import re
import sys
from typing import IO, Any, Optional
from .dbt import (
    COINCIDENCES,
    DegenerateTransformError,
    ExtendedPotential,
    Series,
    coincidence_check,
    extend,
    predicted_pole_count,
    regularity,
    riccati_residual,
    seed,
    transformed_rs,
)
from .exactalg import RatFunc, format_rat, parse_rat
from .laguerre import klh_counts, klh_predict
from .rsfields import Params, isotonic_potential, wick_check
from .shape import DegenerateParametersError, lemma_chain, shape_check
from .spectral import (
    DEFAULT_POINTS,
    DEFAULT_TOL_FACTOR,
    BoundaryError,
    Grid,
    PoleInWindowError,
    default_grid,
    predicted_levels,
    sample_table,
    spectrum_check,
)
from .suite import format_table, run_suite

__all__ = ["RunConfig", "main"]

log = logging.getLogger(__name__)

CHECKS = ("riccati", "shape", "regularity", "klh", "wick", "coincidence")

#: Options whose values may be negative rationals such as ``-3/2``
RATIONAL_OPTIONS = ("--alpha", "--a", "--omega")

NEG_RAT_RGX = re.compile(r"-\d+(/\d+)?")


@dataclass(frozen=True)
class RunConfig:
    """The parsed and validated settings of one invocation"""

    command: str
    check: Optional[str] = None
    series: Optional[Series] = None
    n: int = 0
    omega: Fraction = Fraction(1)
    a: Optional[Fraction] = None
    alpha: Optional[Fraction] = None
    which: tuple[str, ...] = COINCIDENCES
    levels: int = 6
    k: tuple[int, ...] = ()
    extra_state: bool = False
    grid_points: Optional[int] = None
    x_min: Optional[float] = None
    x_max: Optional[float] = None
    samples: int = 500
    tol: Optional[float] = None
    fmt: str = "json"
    output: Optional[str] = None
    quick: bool = False

    @property
    def params(self) -> Params:
        assert self.a is not None
        return Params(self.omega, self.a)

    @property
    def tolerance(self) -> float:
        return self.tol if self.tol is not None else DEFAULT_TOL_FACTOR * float(self.omega)


def rational(s: str) -> Fraction:
    try:
        return parse_rat(s)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def series_name(s: str) -> Optional[Series]:
    if s == "base":
        return None
    try:
        return Series(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown series: {s!r}")


def join_negative_values(argv: list[str]) -> list[str]:
    """
    Glue negative rationals onto the option they follow, so that
    ``--alpha -3/2`` reaches argparse as ``--alpha=-3/2``
    """
    out: list[str] = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if (
            arg in RATIONAL_OPTIONS
            and i + 1 < len(argv)
            and NEG_RAT_RGX.fullmatch(argv[i + 1])
        ):
            out.append(f"{arg}={argv[i + 1]}")
            i += 2
        else:
            out.append(arg)
            i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isotonic",
        description="Rational extensions of the isotonic oscillator",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Log debug messages")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Only log errors")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, series: bool = True, need_n: bool = True) -> None:
        if series:
            p.add_argument("--series", type=series_name, required=True,
                           help="L0, L1, L2, L3 (or base where allowed)")
        p.add_argument("--n", type=int, required=need_n, default=0, help="Index of the extension")
        p.add_argument("--omega", type=rational, default=Fraction(1), help="Frequency, p/q")
        p.add_argument("--a", type=rational, help="Parameter a = l + 1, p/q")
        p.add_argument("-o", "--output", help="Write the result here instead of stdout")

    p_extend = sub.add_parser("extend", help="Build an extended potential")
    common(p_extend)

    p_check = sub.add_parser("check", help="Verify an exact identity")
    p_check.add_argument("check", choices=CHECKS)
    p_check.add_argument("--series", type=series_name, help="L0, L1, L2 or L3")
    p_check.add_argument("--n", type=int, default=0, help="Index of the extension")
    p_check.add_argument("--omega", type=rational, default=Fraction(1), help="Frequency, p/q")
    p_check.add_argument("--a", type=rational, help="Parameter a = l + 1, p/q")
    p_check.add_argument("--alpha", type=rational, help="Laguerre parameter for the klh check")
    p_check.add_argument("--which", choices=COINCIDENCES, action="append",
                         help="Coincidence to check (default: all)")
    p_check.add_argument("--levels", type=int, default=6,
                         help="Number of transformed levels for the riccati check")
    p_check.add_argument("-o", "--output", help="Write the report here instead of stdout")

    def grid_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--grid-points", type=int, help=f"Grid size (default {DEFAULT_POINTS})")
        p.add_argument("--x-min", type=float, help="Left end of the window")
        p.add_argument("--x-max", type=float, help="Right end of the window")

    p_spec = sub.add_parser("spectrum", help="Compute and compare the lowest levels")
    common(p_spec, need_n=False)
    p_spec.add_argument("--levels", type=int, default=6, help="Number of ladder levels")
    p_spec.add_argument("--tol", type=float, help="Acceptance tolerance (default 1e-3*omega)")
    p_spec.add_argument("--format", dest="fmt", choices=["json", "csv"], default="json")
    grid_options(p_spec)

    p_plot = sub.add_parser("plot-data", help="Sample the potential and its states")
    common(p_plot, need_n=False)
    p_plot.add_argument("--levels", type=int, default=6, help="Number of computed levels")
    p_plot.add_argument("--k", type=int, action="append", help="Level to sample (repeatable)")
    p_plot.add_argument("--extra-state", action="store_true", help="Sample the extra state")
    p_plot.add_argument("--samples", type=int, default=500, help="Number of sample points")
    grid_options(p_plot)

    p_suite = sub.add_parser("suite", help="Run the full acceptance matrix")
    p_suite.add_argument("--quick", action="store_true", help="Cap the exact checks at n <= 4")
    p_suite.add_argument("-o", "--output", help="Write the JSON summary here")
    return parser


def make_config(parser: argparse.ArgumentParser, args: argparse.Namespace) -> RunConfig:
    """Validate the parsed arguments against the preconditions of the command"""
    cmd = args.command
    kw: dict[str, Any] = {"command": cmd, "output": getattr(args, "output", None)}
    if cmd == "suite":
        return RunConfig(quick=args.quick, **kw)
    kw["omega"] = args.omega
    kw["a"] = args.a
    kw["n"] = args.n
    kw["series"] = args.series
    if args.omega <= 0:
        parser.error("--omega must be positive")
    if args.n < 0:
        parser.error("--n must be nonnegative")
    if cmd == "check":
        kw["check"] = args.check
        kw["alpha"] = args.alpha
        kw["levels"] = args.levels
        if args.which:
            kw["which"] = tuple(args.which)
        if args.check == "klh":
            if args.alpha is None:
                parser.error("check klh requires --alpha")
            if args.alpha.denominator == 1 and args.alpha < 0:
                parser.error("--alpha must not be a negative integer")
            return RunConfig(**kw)
        if args.a is None:
            parser.error(f"check {args.check} requires --a")
        if args.check in ("riccati", "shape", "regularity") and args.series is None:
            parser.error(f"check {args.check} requires --series")
        if args.check == "shape" and args.series not in (Series.L1, Series.L2):
            parser.error("check shape requires --series L1 or L2")
        return RunConfig(**kw)
    if args.a is None:
        parser.error(f"{cmd} requires --a")
    if cmd == "extend":
        if args.series is None:
            parser.error("extend requires one of L0, L1, L2, L3")
        return RunConfig(**kw)
    kw["levels"] = args.levels
    kw["grid_points"] = args.grid_points
    kw["x_min"] = args.x_min
    kw["x_max"] = args.x_max
    if args.levels < 1:
        parser.error("--levels must be positive")
    if cmd == "spectrum":
        return RunConfig(tol=args.tol, fmt=args.fmt, **kw)
    ks = tuple(args.k or ())
    if any(k < 0 or k >= args.levels for k in ks):
        parser.error(f"--k must lie in 0..{args.levels - 1}")
    if args.extra_state and args.series is None:
        parser.error("--extra-state needs an extended potential")
    return RunConfig(k=ks, extra_state=args.extra_state, samples=args.samples, **kw)


def _grid(cfg: RunConfig, e_max: Fraction) -> Grid:
    g = default_grid(cfg.params, e_max, cfg.grid_points or DEFAULT_POINTS)
    return Grid(
        cfg.x_min if cfg.x_min is not None else g.x_min,
        cfg.x_max if cfg.x_max is not None else g.x_max,
        g.npoints,
    )


def _emit_json(cfg: RunConfig, data: Any) -> None:
    text = json.dumps(data, indent=2) + "\n"
    if cfg.output is None:
        sys.stdout.write(text)
    else:
        with open(cfg.output, "w", encoding="utf-8") as fp:
            fp.write(text)


def _emit_rows(cfg: RunConfig, header: list[str], rows: Any) -> None:
    def write(fp: IO[str]) -> None:
        out = csv.writer(fp)
        out.writerow(header)
        out.writerows(rows)

    if cfg.output is None:
        write(sys.stdout)
    else:
        with open(cfg.output, "w", newline="", encoding="utf-8") as fp:
            write(fp)


def cmd_extend(cfg: RunConfig) -> int:
    assert cfg.series is not None
    ep = extend(cfg.series, cfg.n, cfg.params)
    report = regularity(ep)
    if not report.regular:
        log.warning(
            "%s potential n=%d is singular: %d pole(s) on the positive half line",
            cfg.series.value,
            cfg.n,
            report.pole_count_positive_axis,
        )
    _emit_json(cfg, ep.to_json())
    return 0


def _check_riccati(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    assert cfg.series is not None
    p = cfg.params
    ep: ExtendedPotential = extend(cfg.series, cfg.n, p)
    phi = seed(cfg.series, cfg.n, p)
    residuals: dict[str, Any] = {
        "seed": riccati_residual(phi.field, isotonic_potential(p), phi.energy),
        "extra": riccati_residual(-phi.field, ep.field, phi.energy),
    }
    for k in range(cfg.levels):
        try:
            f = transformed_rs(cfg.series, cfg.n, k, p)
        except DegenerateTransformError:
            residuals[f"k={k}"] = "degenerate"
            continue
        residuals[f"k={k}"] = riccati_residual(f, ep.field, 2 * k * p.omega)
    ok = all(not r for r in residuals.values() if isinstance(r, RatFunc))
    return ok, {
        name: r if isinstance(r, str) else r.to_json() for name, r in residuals.items()
    }


def _check_shape(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    assert cfg.series is not None
    report = shape_check(cfg.series, cfg.n, cfg.params)
    chain = lemma_chain(cfg.series, cfg.n, cfg.params)
    data = report.to_json()
    data["lemma_chain"] = [
        {"identity": s.ident, "n": s.n, "alpha": format_rat(s.alpha), "holds": s.holds}
        for s in chain
    ]
    return report.ok and all(s.holds for s in chain), data


def _check_regularity(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    assert cfg.series is not None
    report = regularity(extend(cfg.series, cfg.n, cfg.params))
    predicted = predicted_pole_count(cfg.series, cfg.n, cfg.params)
    data = report.to_json()
    data["predicted_pole_count"] = predicted
    return report.pole_count_positive_axis == predicted, data


def _check_klh(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    assert cfg.alpha is not None
    pred = klh_predict(cfg.n, cfg.alpha)
    counts = klh_counts(cfg.n, cfg.alpha)
    data = {
        "n": cfg.n,
        "alpha": format_rat(cfg.alpha),
        "predicted": {"pos_zeros": pred.pos_zeros, "neg_zeros": pred.neg_zeros},
        "counted": {"pos_zeros": counts.pos_zeros, "neg_zeros": counts.neg_zeros},
    }
    return pred == counts, data


def _check_wick(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    ok = wick_check(cfg.n, cfg.params)
    return ok, {"n": cfg.n, "params": cfg.params.to_json(), "holds": ok}


def _check_coincidence(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    results = {which: coincidence_check(which, cfg.params) for which in cfg.which}
    return all(results.values()), {"params": cfg.params.to_json(), "holds": results}


def cmd_check(cfg: RunConfig) -> int:
    runner = {
        "riccati": _check_riccati,
        "shape": _check_shape,
        "regularity": _check_regularity,
        "klh": _check_klh,
        "wick": _check_wick,
        "coincidence": _check_coincidence,
    }[cfg.check or ""]
    try:
        ok, data = runner(cfg)
    except DegenerateParametersError as e:
        log.error("%s", e)
        _emit_json(cfg, {"check": cfg.check, "passed": False, "degenerate": str(e)})
        return 1
    _emit_json(cfg, {"check": cfg.check, "passed": ok, "report": data})
    if not ok:
        log.error("check %s failed", cfg.check)
    return 0 if ok else 1


def cmd_spectrum(cfg: RunConfig) -> int:
    p = cfg.params
    predicted = predicted_levels(cfg.series, cfg.n, p, cfg.levels)
    report = spectrum_check(cfg.series, cfg.n, p, cfg.levels, _grid(cfg, max(predicted)))
    if cfg.fmt == "csv":
        _emit_rows(cfg, ["k", "predicted", "computed", "abs_error", "nodes"], report.csv_rows())
    else:
        _emit_json(cfg, report.to_json())
    ok = report.ok(cfg.tolerance)
    if not ok:
        log.error(
            "spectrum check failed: max abs error %.3e, tolerance %.3e",
            report.max_abs_error,
            cfg.tolerance,
        )
    return 0 if ok else 1


def cmd_plotdata(cfg: RunConfig) -> int:
    p = cfg.params
    predicted = predicted_levels(cfg.series, cfg.n, p, cfg.levels)
    g = _grid(cfg, max(predicted))
    g = Grid(g.x_min, g.x_max, cfg.samples)
    header, table = sample_table(cfg.series, cfg.n, p, g, cfg.k, cfg.extra_state)
    _emit_rows(cfg, header, table.tolist())
    return 0


def cmd_suite(cfg: RunConfig) -> int:
    results = run_suite(quick=cfg.quick)
    print(format_table(results))
    if cfg.output is not None:
        _emit_json(cfg, [r.to_json() for r in results])
    for r in results:
        for failure in r.failures:
            log.error("%s: %s", r.name, failure)
    return 0 if all(r.passed for r in results) else 1


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(join_negative_values(sys.argv[1:] if argv is None else argv))
    level = logging.DEBUG if args.verbose else logging.ERROR if args.quiet else logging.INFO
    logging.basicConfig(format="%(levelname)s: %(message)s", level=level)
    cfg = make_config(parser, args)
    commands = {
        "extend": cmd_extend,
        "check": cmd_check,
        "spectrum": cmd_spectrum,
        "plot-data": cmd_plotdata,
        "suite": cmd_suite,
    }
    try:
        return commands[cfg.command](cfg)
    except (PoleInWindowError, DegenerateTransformError) as e:
        log.error("%s", e)
        return 1
    except BoundaryError as e:
        log.error("%s", e)
        return 2
