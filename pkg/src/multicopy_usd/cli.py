"""Command-line interface for feasibility queries, reports, and simulations.

Exit codes: 0 on success, 2 on a validation error (bad flags or parameters),
3 when a verification step fails (an indefinite measurement or a witness that
does not certify). All commands are deterministic given their flags, seed
included; rerunning writes byte-identical data files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .bounds import achievability_witness, classify, dependence_witness
from .discrimination import usd_povm, verify_povm
from .simulate import pairwise_strategy, run_trials
from .states import li_rank, tensor_power
from .trine import (
    lifted_curve,
    multitrine_representation,
    p_max_multitrine,
    pairwise_success,
    trine_table,
)
from . import report

#: Seed used by every command unless --seed is given.
DEFAULT_SEED = 20120509

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3


def _common_flags(parser: argparse.ArgumentParser, default_format: str) -> None:
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help=f"random seed (default {DEFAULT_SEED})")
    parser.add_argument("--tol", type=float, default=1e-10,
                        help="verification tolerance (default 1e-10)")
    parser.add_argument("--out", type=Path, default=None,
                        help="output file (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default=default_format,
                        help=f"output format (default {default_format})")


def _plot_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--plot", action=argparse.BooleanOptionalAction, default=True,
                        help="render a figure next to the data file (default on)")
    parser.add_argument("--plot-out", type=Path, default=None,
                        help="figure file (default: data file with .png suffix)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multicopy-usd",
        description="Zero-error identification of linearly dependent states "
                    "from multiple copies: bounds, optima, measurements, and "
                    "Monte Carlo checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="classify (N, C, D) against both copy-count bounds")
    p.add_argument("--n", type=int, required=True, help="number of candidate states")
    p.add_argument("--c", type=int, required=True, help="copies of the prepared state")
    p.add_argument("--d", type=int, required=True, help="single-copy dimension")
    _common_flags(p, "json")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("lifted-curve",
                       help="optimum success probability over a lift grid")
    p.add_argument("--grid", type=int, default=201, help="grid points (default 201)")
    _common_flags(p, "csv")
    _plot_flags(p)
    p.set_defaults(func=cmd_lifted_curve)

    p = sub.add_parser("trine-table",
                       help="per-copy-count lift, optimum, and pairwise success")
    p.add_argument("--c-max", type=int, default=12,
                   help="largest copy count (default 12)")
    _common_flags(p, "csv")
    _plot_flags(p)
    p.set_defaults(func=cmd_trine_table)

    p = sub.add_parser("simulate", help="Monte Carlo trine discrimination trials")
    p.add_argument("--c", type=int, required=True, help="copies of the prepared state")
    p.add_argument("--n", type=int, default=100_000,
                   help="number of trials (default 100000)")
    p.add_argument("--strategy", choices=("collective", "pairwise"),
                   default="collective")
    _common_flags(p, "json")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("witness",
                       help="random ensemble certifying a bound is tight")
    p.add_argument("kind", choices=("achieve", "depend"),
                   help="achieve: meet the necessary bound with independent "
                        "copy products; depend: exceed the sufficient bound "
                        "with dependent ones")
    p.add_argument("--c", type=int, required=True, help="copies of the prepared state")
    p.add_argument("--d", type=int, required=True, help="single-copy dimension")
    _common_flags(p, "json")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify-povm",
                       help="audit the optimal multi-copy trine measurement")
    p.add_argument("--c", type=int, required=True, help="copies of the prepared state")
    p.add_argument("--p", type=float, default=None,
                   help="per-state success level (default: the optimum)")
    _common_flags(p, "json")
    p.set_defaults(func=cmd_verify_povm)

    return parser


def _emit(text: str, out: Path | None) -> None:
    report.write_text(text, out)


def _figure_path(args) -> Path | None:
    if args.plot_out is not None:
        return args.plot_out
    if args.plot and args.out is not None:
        return args.out.with_suffix(".png")
    return None


def cmd_bounds(args) -> int:
    verdict = classify(args.n, args.c, args.d)
    _emit(report.record_text(verdict.to_json(), args.format), args.out)
    return EXIT_OK


def cmd_lifted_curve(args) -> int:
    grid, values = lifted_curve(args.grid)
    rows = list(zip((float(g) for g in grid), (float(v) for v in values)))
    _emit(report.table_text(("lambda", "p_max"), rows, args.format), args.out)
    figure = _figure_path(args)
    if figure is not None:
        report.render_lifted_curve(figure, grid, values)
    return EXIT_OK


def cmd_trine_table(args) -> int:
    rows = trine_table(args.c_max)
    _emit(report.table_text(("C", "L_C", "p_max", "pairwise_p"), rows, args.format),
          args.out)
    figure = _figure_path(args)
    if figure is not None:
        report.render_trine_table(figure, rows)
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.c < 2:
        raise ValueError("zero-error identification needs at least 2 copies")
    if args.strategy == "collective":
        representation = multitrine_representation(args.c)
        povm = usd_povm(representation, p_max_multitrine(args.c))
        stats = run_trials(representation, povm, args.n, args.seed)
        analytic = p_max_multitrine(args.c)
        measured_copies = args.c
    else:
        # an odd leftover copy is discarded before pairing; it buys nothing
        measured_copies = args.c if args.c % 2 == 0 else args.c - 1
        stats = pairwise_strategy(measured_copies, args.n, args.seed)
        analytic = pairwise_success(args.c)
    payload = {
        "schema": 1,
        "config": {
            "command": "simulate",
            "C": args.c,
            "strategy": args.strategy,
            "measured_copies": measured_copies,
            "seed": args.seed,
        },
        **stats.to_json(),
        "analytic_success": analytic,
    }
    _emit(report.record_text(payload, args.format), args.out)
    return EXIT_OK


def cmd_witness(args) -> int:
    rng = np.random.default_rng(args.seed)
    if args.kind == "achieve":
        ensemble = achievability_witness(args.c, args.d, rng)
        expect_independent = True
    else:
        ensemble = dependence_witness(args.c, args.d, rng)
        expect_independent = False
    powers = [tensor_power(s, args.c) for s in ensemble.states]
    rank = li_rank(powers)
    independent = rank == ensemble.n_states
    passed = independent == expect_independent and ensemble.is_distinct()
    payload = {
        "schema": 1,
        "kind": args.kind,
        "C": args.c,
        "D": args.d,
        "seed": args.seed,
        **ensemble.to_json(),
        "verification": {
            "copy_product_rank": rank,
            "independent": independent,
            "expected_independent": expect_independent,
            "distinct": ensemble.is_distinct(),
            "passed": passed,
        },
    }
    _emit(report.record_text(payload, args.format), args.out)
    return EXIT_OK if passed else EXIT_VERIFY


def cmd_verify_povm(args) -> int:
    if args.c < 2:
        raise ValueError("zero-error identification needs at least 2 copies")
    level = p_max_multitrine(args.c) if args.p is None else args.p
    representation = multitrine_representation(args.c)
    povm = usd_povm(representation, level)
    audit = verify_povm(povm, representation, tol=args.tol)
    payload = {
        "schema": 1,
        "C": args.c,
        "p": level,
        **audit.to_json(),
    }
    _emit(report.record_text(payload, args.format), args.out)
    return EXIT_OK if audit.passed else EXIT_VERIFY


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
