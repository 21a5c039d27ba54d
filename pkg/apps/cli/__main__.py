from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from dotenv import load_dotenv
from loguru import logger

from apps.adapters.eventbus.in_process import InProcessEventBus
from apps.adapters.logging.jsonl_logger import JsonlEventLogger
from apps.adapters.parallel.objective_map import jobs_from_env, make_objective_map
from apps.cli.commands import (
    EXIT_USAGE,
    CommandOutcome,
    cmd_bounds,
    cmd_extremal,
    cmd_pair,
    cmd_spectrum,
    cmd_verify,
)
from apps.cli.event_printer import make_event_printer
from apps.cli.output import OutputFormat, render
from apps.cli.verify import VerifyLevel
from apps.core.search.models import SearchConfig, SearchConfigError


def _positive_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[item.value for item in OutputFormat],
        default=OutputFormat.JSON.value,
    )
    common.add_argument("--verbose", action="store_true", help="Print search progress to stderr")
    common.add_argument("--event-log", default=None, help="Append events as JSON lines (overrides GEO_EVENT_LOG_PATH)")

    parser = argparse.ArgumentParser(
        prog="python -m apps.cli",
        description="Sharp bounds for pairs of simple closed geodesics crossing n times.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bounds = sub.add_parser("bounds", parents=[common], help="l_n, u_n and known L_n per n")
    bounds.add_argument("--n-max", type=_positive_int, default=3)

    spectrum = sub.add_parser("spectrum", parents=[common], help="Simple length spectrum of a cusped torus")
    spectrum.add_argument("--r", type=float, required=True)
    spectrum.add_argument("--s", type=float, required=True)
    spectrum.add_argument("--t", type=float, default=None, help="Defaults to the smaller root of the cusp relation")
    spectrum.add_argument("--cutoff", type=float, default=6.0)

    extremal = sub.add_parser("extremal", parents=[common], help="Search for the surface minimizing L_n")
    extremal.add_argument("--n", type=_positive_int, required=True)
    extremal.add_argument("--grid-lo", type=float, default=None)
    extremal.add_argument("--grid-hi", type=float, default=None)
    extremal.add_argument("--grid-steps", type=int, default=None)
    extremal.add_argument("--cutoff-factor", type=float, default=None)
    extremal.add_argument("--tol", type=float, default=None, help="Simplex diameter tolerance")
    extremal.add_argument("--max-iters", type=int, default=None)
    extremal.add_argument("--jobs", type=_positive_int, default=None, help="Worker processes (GEO_JOBS)")

    pair = sub.add_parser("pair", parents=[common], help="Shortest geodesic crossing alpha twice")
    pair.add_argument("--alpha", type=float, required=True)
    pair.add_argument("--eps", type=float, default=0.0, help="Boundary length; 0 for a cusp")

    verify = sub.add_parser("verify", parents=[common], help="Run the self-verification suite")
    verify.add_argument("--level", choices=[item.value for item in VerifyLevel], default=VerifyLevel.FAST.value)
    return parser


def _configure_logging() -> None:
    logger.remove()
    logger.enable("apps")
    logger.add(sys.stderr, level=os.getenv("LOG_LEVEL", "WARNING"))


def _event_bus(args: argparse.Namespace) -> Optional[InProcessEventBus]:
    event_logger = JsonlEventLogger(args.event_log) if args.event_log else JsonlEventLogger.from_env()
    if not args.verbose and event_logger is None:
        return None
    bus = InProcessEventBus()
    if args.verbose:
        bus.subscribe(object, make_event_printer())
    if event_logger is not None:
        bus.subscribe(object, event_logger.handle)
    return bus


def _run(args: argparse.Namespace) -> CommandOutcome:
    if args.command == "bounds":
        return cmd_bounds(args.n_max)
    if args.command == "spectrum":
        return cmd_spectrum(args.r, args.s, args.t, args.cutoff)
    if args.command == "pair":
        return cmd_pair(args.alpha, args.eps)
    if args.command == "verify":
        return cmd_verify(VerifyLevel(args.level))
    config = SearchConfig.from_env(args.n).with_overrides(
        grid_lo=args.grid_lo,
        grid_hi=args.grid_hi,
        grid_steps=args.grid_steps,
        cutoff_factor=args.cutoff_factor,
        refine_tol=args.tol,
        max_refine_iters=args.max_iters,
    )
    jobs = args.jobs if args.jobs is not None else jobs_from_env()
    return cmd_extremal(config, objective_map=make_objective_map(jobs), event_bus=_event_bus(args))


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        outcome = _run(args)
    except (SearchConfigError, ValueError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render(outcome.envelope, OutputFormat(args.format)))
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
