"""Command-line experiment runner.

Subcommands:
    sweep         evaluate a config's n_values and write CSV/JSON records
    verify        run the built-in identity suite (exit 3 on failure)
    weights-check print finite-horizon regularity diagnostics for a family
    reduce        force the reduction path: print the ensemble, then records

Exit codes: 0 success, 1 validation/usage error, 2 capacity error,
3 verify-suite failure.
"""

from __future__ import annotations

import argparse
import sys

from . import config as cfg
from . import reduction, sweep, verify
from . import weights as wt
from .errors import CapacityError, ValidationError
from .states import density_ratio, gibbs_state, perturb_unitary

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CAPACITY = 2
EXIT_VERIFY_FAILED = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for capacity problems here
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ValidationError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mixent", description="weighted mixture state entropy experiments")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="run a convergence sweep from a config file")
    p_sweep.add_argument("--config", required=True, help="path to the JSON config")
    p_sweep.add_argument("--out", help="output path (default: stdout)")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--workers", type=int, default=1, help="concurrent sweep points")
    p_sweep.add_argument(
        "--timings", action="store_true",
        help="record wall-clock runtime_ms (off by default to keep output reproducible)",
    )

    sub.add_parser("verify", help="run the built-in verification suite")

    p_weights = sub.add_parser("weights-check", help="finite-horizon regularity diagnostics")
    p_weights.add_argument("--scheme", required=True, help="family name")
    p_weights.add_argument("--params", nargs="*", default=[], metavar="K=V",
                           help="family parameters, e.g. width=2 or ratio=0.5")
    p_weights.add_argument("--horizon", type=int, required=True)

    p_reduce = sub.add_parser("reduce", help="force the reduction path and print the ensemble")
    p_reduce.add_argument("--config", required=True, help="path to the JSON config")

    return parser


def _parse_params(pairs: list[str]) -> dict:
    params = {}
    for pair in pairs:
        if "=" not in pair:
            raise ValidationError(f"params must look like K=V, got {pair!r}")
        key, value = pair.split("=", 1)
        try:
            params[key] = int(value)
        except ValueError:
            try:
                params[key] = float(value)
            except ValueError:
                params[key] = value
    return params


def _cmd_sweep(args) -> int:
    config = cfg.load_config(args.config)
    records = sweep.run_sweep(config, workers=args.workers, timings=args.timings)
    text = sweep.records_to_csv(records) if args.format == "csv" else sweep.records_to_json(records)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(_args) -> int:
    report = verify.run_verify()
    print(verify.render_report(report))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _cmd_weights_check(args) -> int:
    params = _parse_params(args.params)
    if args.scheme == "custom":
        raise ValidationError("custom schemes need a config file; weights-check covers built-ins")
    scheme = cfg.scheme_from_spec({"family": args.scheme, **params})
    report = wt.regularity_diagnostics(scheme, args.horizon)
    print(f"scheme: {args.scheme}    declared class: {report.analytic_class}")
    print(f"{'n':>6}  {'row_sum':>14}  {'max_entry':>14}  {'variation':>14}")
    for i in range(report.horizon):
        print(
            f"{i + 1:>6}  {report.row_sums[i]:>14.12g}  "
            f"{report.max_entries[i]:>14.12g}  {report.variation_sums[i]:>14.12g}"
        )
    return EXIT_OK


def _cmd_reduce(args) -> int:
    config = cfg.load_config(args.config)
    if config.k != 1:
        raise ValidationError("the reduction path supports k = 1 only")
    reduction.require_validated()
    rho = gibbs_state(config.hamiltonian, config.beta)
    sigma = perturb_unitary(rho, config.unitary) if config.unitary is not None else config.sigma
    ens = reduction.reduce_to_ensemble(rho, density_ratio(rho, sigma))
    print("reduced ensemble (ratio eigenvalues with rho-weights):")
    for x, q in zip(ens.values, ens.probs):
        print(f"  value {x:.12g}    prob {q:.12g}")
    print(f"  sum(prob) = {ens.probs.sum():.12g}   mean = {ens.moment(1):.12g}   "
          f"second moment = {ens.moment(2):.12g}")
    records = []
    for n in config.n_values:
        if wt.is_exchangeable(wt.row(config.scheme, n)):
            value = reduction.bs_exchangeable_exact(ens, n)
            records.append(sweep.ConvergenceRecord(n, "reduction_exact", "S_BS", value))
        else:
            est = reduction.bs_monte_carlo(ens, config.scheme, n, config.samples, config.seed)
            records.append(sweep.ConvergenceRecord(n, "reduction_mc", "S_BS", est.mean, est.std_error))
    sys.stdout.write(sweep.records_to_csv(records))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "weights-check":
            return _cmd_weights_check(args)
        if args.command == "reduce":
            return _cmd_reduce(args)
        raise ValidationError(f"unknown command {args.command!r}")
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
