"""Command-line interface.

Subcommands: compute, sweep, validate, montecarlo, compare.  Exit codes:
0 success, 1 validation/parse error, 2 numerical failure (open circuit,
singular system), 3 validation-tolerance failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import reporting
from .config import load_builtin_config, load_config
from .errors import OpenCircuitError, SingularNetworkError, ValidationError
from .model import equivalent_resistance
from .network import validate_stack
from .particles import (monte_carlo_contacts, sweep_particle_count,
                        sweep_shell_thickness)

PARAM_CHOICES = ("particle-count", "shell-thickness")

# built-in sweep grids when neither flags nor config provide one
DEFAULT_COUNT_SWEEP = (1.0, 30.0, 30)
DEFAULT_THICKNESS_STEPS = 30
DEFAULT_THICKNESS_FROM = 0.05  # um

DEFAULT_TRIALS = 10000
DEFAULT_SEED = 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", metavar="PATH",
        help="stack config (JSON); defaults to the bundled reference stack")
    common.add_argument(
        "--format", choices=reporting.FORMATS, default=reporting.TABLE,
        help="report format (default: table)")
    common.add_argument(
        "--output", metavar="PATH",
        help="write the report to a file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="cogres",
        description="Contact resistance modeling for chip-on-glass ACF "
                    "packaging stacks")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("compute", parents=[common],
                   help="per-layer resistance breakdown and total")

    sweep = sub.add_parser("sweep", parents=[common],
                           help="sweep a joint parameter")
    sweep.add_argument("--param", choices=PARAM_CHOICES,
                       help="swept parameter (default from config, else "
                            "particle-count)")
    sweep.add_argument("--from", dest="start", type=float, metavar="F",
                       help="sweep start")
    sweep.add_argument("--to", dest="stop", type=float, metavar="T",
                       help="sweep end (inclusive)")
    sweep.add_argument("--steps", type=int, metavar="N",
                       help="number of sweep points")

    validate = sub.add_parser("validate", parents=[common],
                              help="cross-check the closed form against a "
                                   "resistor-network solve")
    validate.add_argument("--cubes", type=int, default=32, metavar="K",
                          help="cubes per discretized layer (default 32)")
    validate.add_argument("--tolerance", type=float, default=1e-6,
                          metavar="E",
                          help="relative error to pass (default 1e-6)")

    mc = sub.add_parser("montecarlo", parents=[common],
                        help="random contact-count trials")
    mc.add_argument("--trials", type=int, metavar="N",
                    help=f"number of trials (default {DEFAULT_TRIALS})")
    mc.add_argument("--seed", type=int, metavar="S",
                    help=f"RNG seed (default {DEFAULT_SEED})")

    compare = sub.add_parser("compare", parents=[common],
                             help="measured vs predicted resistance ratio")
    compare.add_argument("--measured", type=float, metavar="M",
                         help="measured resistance (ohm); default from "
                              "config measured_resistance_ohm")
    return parser


def _sweep_values(args, cfg, stack):
    param = args.param
    if param is None:
        param = cfg.sweep.parameter if cfg.sweep else "particle-count"
    from_config = cfg.sweep is not None and cfg.sweep.parameter == param
    if param == "particle-count":
        defaults = (cfg.sweep.start, cfg.sweep.stop, cfg.sweep.steps) \
            if from_config else DEFAULT_COUNT_SWEEP
    else:
        if stack.acf is None:
            raise ValidationError("stack has no ACF layer to sweep")
        defaults = (cfg.sweep.start, cfg.sweep.stop, cfg.sweep.steps) \
            if from_config else (DEFAULT_THICKNESS_FROM,
                                 stack.acf.particle.radius,
                                 DEFAULT_THICKNESS_STEPS)
    start = args.start if args.start is not None else defaults[0]
    stop = args.stop if args.stop is not None else defaults[1]
    steps = args.steps if args.steps is not None else defaults[2]
    if steps < 1:
        raise ValidationError(f"--steps must be >= 1, got {steps}")
    return param, np.linspace(start, stop, steps)


def _dispatch(args, cfg):
    stack = cfg.assembly
    if args.command == "compute":
        return reporting.render_breakdown(
            equivalent_resistance(stack), args.format), 0

    if args.command == "sweep":
        param, values = _sweep_values(args, cfg, stack)
        if param == "particle-count":
            result = sweep_particle_count(stack, values)
        else:
            result = sweep_shell_thickness(stack, values)
        return reporting.render_sweep(result, stack, args.format), 0

    if args.command == "validate":
        report = validate_stack(stack, cubes_per_layer=args.cubes,
                                tolerance=args.tolerance)
        return (reporting.render_validation(report, args.format),
                0 if report.passed else 3)

    if args.command == "montecarlo":
        acf = stack.acf
        if acf is None:
            raise ValidationError("stack has no ACF layer")
        if acf.density is not None:
            density, area = acf.density, acf.area
        else:
            density, area = acf.contact_count, 1.0
        mc = cfg.monte_carlo
        trials = args.trials if args.trials is not None \
            else (mc.trials if mc else DEFAULT_TRIALS)
        seed = args.seed if args.seed is not None \
            else (mc.seed if mc else DEFAULT_SEED)
        dist = monte_carlo_contacts(density, area, trials, seed)
        return reporting.render_distribution(dist, args.format), 0

    # compare
    measured = args.measured if args.measured is not None \
        else stack.measured_resistance
    if measured is None:
        raise ValidationError(
            "no measured resistance: pass --measured or set "
            "measured_resistance_ohm in the config")
    predicted = equivalent_resistance(stack).total
    comparison = reporting.compare_measurement(predicted, measured)
    return reporting.render_comparison(comparison, args.format), 0


def run_command(argv=None) -> int:
    """Run one CLI invocation; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; map to the validation code
        return 0 if not exc.code else 1

    try:
        cfg = load_builtin_config() if args.config is None \
            else load_config(args.config)
        report, status = _dispatch(args, cfg)
    except ValidationError as exc:
        print(f"cogres: error: {exc}", file=sys.stderr)
        return 1
    except (OpenCircuitError, SingularNetworkError) as exc:
        print(f"cogres: numerical failure: {exc}", file=sys.stderr)
        return 2

    if args.output:
        try:
            with open(args.output, "w") as handle:
                handle.write(report)
        except OSError as exc:
            print(f"cogres: error: cannot write {args.output}: {exc}",
                  file=sys.stderr)
            return 1
    else:
        sys.stdout.write(report)
    return status


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
