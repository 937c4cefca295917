"""Command-line front-end: ``oqsinfo {time-sweep,lambda-sweep,density}``.

Exit codes: 0 success, 1 configuration error, 2 at least one row violated an
entropic uncertainty bound (the CSV is still written).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .runner import (
    ConfigError,
    emit_density_snapshots,
    load_config,
    run_lambda_sweep,
    run_time_sweep,
)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_BOUND = 2


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="flat 'key = value' file; flags override its values")
    p.add_argument("--model", choices=["ho", "moshinsky"])
    p.add_argument("--regime", choices=["dephasing", "relaxation"])
    p.add_argument("--omega")
    p.add_argument("--gamma", help="comma-separated list, e.g. 0.15,0.3,0.5")
    p.add_argument("--lambda", dest="lambda_", help="comma-separated list")
    p.add_argument("--t-start")
    p.add_argument("--t-stop")
    p.add_argument("--t-step")
    p.add_argument("--times", help="explicit instants, e.g. 'pi/2,pi,2pi'; overrides the time grid")
    p.add_argument("--grid-half-width")
    p.add_argument("--grid-points", type=int)
    p.add_argument("--grid-points-2d", type=int)
    p.add_argument("--out", help="output CSV path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oqsinfo",
        description="Information measures of open harmonic-oscillator and Moshinsky-atom models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _add_common(sub.add_parser("time-sweep", help="entropies and mutual information versus time"))
    _add_common(sub.add_parser("lambda-sweep", help="entropy sums versus interparticle strength"))
    density = sub.add_parser("density", help="sampled one-particle densities")
    _add_common(density)
    density.add_argument("--space", choices=["x", "p"])
    return parser


def _config_from_args(args):
    overrides = {
        "model": args.model,
        "regime": args.regime,
        "omega": args.omega,
        "gamma": args.gamma,
        "lambda": args.lambda_,
        "t_start": args.t_start,
        "t_stop": args.t_stop,
        "t_step": args.t_step,
        "times": args.times,
        "grid_half_width": args.grid_half_width,
        "grid_points": args.grid_points,
        "grid_points_2d": args.grid_points_2d,
        "space": getattr(args, "space", None),
        "out": args.out,
    }
    return load_config(args.config, default_lambda_sweep=args.command == "lambda-sweep", **overrides)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
        if args.command == "time-sweep":
            result = run_time_sweep(config)
        elif args.command == "lambda-sweep":
            result = run_lambda_sweep(config)
        else:
            result = emit_density_snapshots(config)
    except (ConfigError, ValueError, OSError) as exc:
        print(f"oqsinfo: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    text = result.to_csv()
    if config.out:
        Path(config.out).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)
    if result.violations:
        print(f"oqsinfo: warning: {result.violations} row(s) violate an entropic bound", file=sys.stderr)
        return EXIT_BOUND
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
