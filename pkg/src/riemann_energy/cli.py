"""Command line entry point.

    riemann-energy constants [--tol T]
    riemann-energy identity [--configs K] [--max-n M] [--seed S]
    riemann-energy estimate --degrees 2,4,8,16 --samples 2000 [--seed S] [--workers W]
                            [--format csv|json] [--out PATH] [--z-max Z]
    riemann-energy sweep --min 2 --max 64 --step 2 --samples S ...

Exit status: 0 success, 1 acceptance violation (z-score beyond ``--z-max`` or
identity discrepancy above 1e-10), 2 numerical failure.
"""

import argparse
import json
import sys
from dataclasses import asdict

from .exceptions import ConvergenceFailure, RootFindingFailure, TooManyRejections
from .experiment import (
    ExperimentConfig,
    format_reports,
    run_constants_check,
    run_energy_experiment,
    run_identity_check,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_NUMERICAL = 2

IDENTITY_TOL = 1e-10


def _degrees(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _add_mc_options(p):
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument(
        "--z-max",
        type=float,
        default=4.0,
        help="flag a violation when any |z| exceeds this (default 4)",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="riemann-energy",
        description="Energies of random polynomial zeros on the Riemann sphere.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="quadrature values of C_half and the Robin constant")
    p.add_argument("--tol", type=float, default=1e-8)

    p = sub.add_parser("identity", help="check the energy conversion identity on random configurations")
    p.add_argument("--configs", type=int, default=1000)
    p.add_argument("--max-n", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("estimate", help="Monte Carlo energies at the given degrees")
    p.add_argument("--degrees", type=_degrees, required=True)
    _add_mc_options(p)

    p = sub.add_parser("sweep", help="Monte Carlo energies over an arithmetic range of degrees")
    p.add_argument("--min", type=int, required=True, dest="dmin")
    p.add_argument("--max", type=int, required=True, dest="dmax")
    p.add_argument("--step", type=int, default=1)
    _add_mc_options(p)
    return parser


def _run_estimate(args, degrees):
    cfg = ExperimentConfig(
        degrees=degrees,
        samples_per_degree=args.samples,
        master_seed=args.seed,
        workers=args.workers,
        output_format=args.format,
    )
    reports = run_energy_experiment(cfg)
    text = format_reports(reports, cfg.output_format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    worst = max(max(abs(r.z_abs), abs(r.z_zhong)) for r in reports)
    if worst > args.z_max:
        print(f"z-score {worst:.3f} exceeds {args.z_max}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "constants":
            report = run_constants_check(args.tol)
            json.dump(asdict(report), sys.stdout, indent=2)
            sys.stdout.write("\n")
            return EXIT_OK
        if args.command == "identity":
            worst = run_identity_check(args.configs, args.max_n, args.seed)
            print(json.dumps({"max_relative_discrepancy": worst}))
            return EXIT_OK if worst <= IDENTITY_TOL else EXIT_VIOLATION
        if args.command == "estimate":
            return _run_estimate(args, args.degrees)
        if args.command == "sweep":
            return _run_estimate(args, list(range(args.dmin, args.dmax + 1, args.step)))
    except (ConvergenceFailure, RootFindingFailure, TooManyRejections) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK
