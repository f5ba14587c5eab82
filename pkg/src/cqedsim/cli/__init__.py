"""Command-line front end.

    cqed run <config> [--tol R] [--seed N]
    cqed sweep <config> --axis <path> --values v1,v2,... [--jobs N]
    cqed list-scenarios

Exit codes: 0 success, 2 configuration error, 3 numerical failure,
4 I/O error.
"""

import argparse
import sys

from ..errors import (ConfigError, ConvergenceError, IntegrationError,
                      UnreachableAngleError)
from .config import ScenarioConfig, load_config, scenario_config_from_manifest
from .scenarios import SCENARIOS, RunResult, run_scenario, sweep

__all__ = [
    "SCENARIOS",
    "RunResult",
    "ScenarioConfig",
    "load_config",
    "main",
    "run_scenario",
    "scenario_config_from_manifest",
    "sweep",
]

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cqed",
        description="Scenario-driven qubit-cavity simulations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run one scenario config")
    run_p.add_argument("config", help="path to the scenario config file")
    run_p.add_argument("--tol", type=float, default=None,
                       help="relative integrator tolerance override")
    run_p.add_argument("--seed", type=int, default=None,
                       help="reserved; no stochastic paths yet")

    sweep_p = sub.add_parser("sweep", help="sweep one scalar parameter")
    sweep_p.add_argument("config")
    sweep_p.add_argument("--axis", required=True,
                         help="parameter path, e.g. scenario.g_MHz")
    sweep_p.add_argument("--values", required=True,
                         help="comma-separated list of axis values")
    sweep_p.add_argument("--jobs", type=int, default=1,
                         help="concurrent sweep points")
    sweep_p.add_argument("--tol", type=float, default=None)
    sweep_p.add_argument("--seed", type=int, default=None)

    sub.add_parser("list-scenarios", help="describe the scenario kinds")
    return parser


def _parse_values(text: str) -> list[float]:
    items = [s for s in text.split(",") if s.strip()]
    if not items:
        raise ConfigError("values", "expected a comma-separated list")
    try:
        return [float(s) for s in items]
    except ValueError as exc:
        raise ConfigError("values", f"invalid number in {text!r}") from exc


def _report(result: RunResult):
    print(f"wrote {result.csv_path}")
    if result.svg_path is not None:
        print(f"wrote {result.svg_path}")
    print(f"wrote {result.manifest_path}")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "list-scenarios":
            for kind, definition in SCENARIOS.items():
                print(f"{kind:20s} {definition.description}")
            return EXIT_OK
        config = load_config(args.config)
        if args.command == "run":
            command = {"seed": args.seed} if args.seed is not None else None
            _report(run_scenario(config, tol=args.tol, command=command))
            return EXIT_OK
        values = _parse_values(args.values)
        _report(sweep(config, args.axis, values, jobs=args.jobs,
                      tol=args.tol))
        return EXIT_OK
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (IntegrationError, ConvergenceError, UnreachableAngleError,
            ArithmeticError, ValueError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
