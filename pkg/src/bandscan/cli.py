"""Command-line front end.

    bandscan solve --config PATH [--q Q] [--regime known|unknown]
    bandscan sweep --config PATH --param F|q --from A --to B --steps N
    bandscan simulate --x X --y Y --trials N --seed S
    bandscan verify --config PATH [--grid N]

Exit codes: 0 success, 1 usage error, 2 validation error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from .equilibrium import KNOWN, UNKNOWN, solve
from .formats import (format_certificate, format_equilibrium, format_saddle_report,
                      format_tiling, load_config, parse_tiling)
from .model import ParameterError
from .oracle import GridSpec, certify_equilibrium
from .sweep import SweepSpec, jump_rows, run_sweep, switch_points, write_csv
from .tiling import build_tilings, simulate_detection, verify_saddle_bounds

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _params(args):
    p = load_config(args.config)
    changes = {}
    if getattr(args, "q", None) is not None:
        changes["q"] = args.q
    if getattr(args, "F", None) is not None:
        changes["F"] = args.F
    return p.replace(**changes) if changes else p


def _regime(args, p):
    if args.regime:
        return args.regime
    return UNKNOWN if p.q < 1 else KNOWN


def cmd_solve(args, out) -> int:
    p = _params(args)
    eq = solve(p, _regime(args, p))
    out.write(format_equilibrium(eq))
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    p = _params(args)
    spec = SweepSpec(args.param, args.start, args.stop, args.steps, p, args.regime)
    rows = run_sweep(spec)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_csv(rows, fh)
    else:
        write_csv(rows, out)
    jumps = jump_rows(rows)
    refined = switch_points(spec, rows)
    for row, at in zip(jumps, refined):
        print(f"# jump in x at {spec.parameter}={row.param_value:.6f} "
              f"(switch point {at:.9f})", file=sys.stderr)
    if not jumps:
        print("# no jump in x", file=sys.stderr)
    return EXIT_OK


def cmd_simulate(args, out) -> int:
    if args.tiling:
        with open(args.tiling) as fh:
            sol = parse_tiling(fh.read())
    elif args.x is not None and args.y is not None:
        sol = build_tilings(args.x, args.y)
    else:
        raise UsageError("simulate needs --x and --y, or --tiling")
    res = simulate_detection(sol, args.trials, args.seed)
    out.write(format_tiling(sol))
    out.write("[simulation]\n"
              f"exact = {res.exact!r}\n"
              f"estimate = {res.estimate!r}\n"
              f"std_error = {res.std_error:.6e}\n"
              f"z = {res.z_score:+.3f}\n"
              f"trials = {res.trials}\n"
              f"seed = {res.seed}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    ok = True
    if args.config:
        p = _params(args)
        regime = _regime(args, p)
        eq = solve(p, regime)
        x = eq.x if args.x is None else args.x
        y = eq.y if args.y is None else args.y
        if args.x is None and args.y is None:
            out.write(format_equilibrium(eq))
        cert = certify_equilibrium(p, (x, y), GridSpec(args.grid, args.grid), regime)
        out.write(format_certificate(cert))
        ok &= cert.passed
        if not cert.passed:
            worst = "scanner" if cert.eps_scanner >= cert.eps_invader else "invader"
            print(f"verification failed: {worst} gains "
                  f"{max(cert.eps_scanner, cert.eps_invader):.6e} > {cert.tolerance:.6e}",
                  file=sys.stderr)
    elif args.x is None or args.y is None:
        raise UsageError("verify needs --config, or --x and --y for the tiling check")
    else:
        x, y = args.x, args.y
    rep = verify_saddle_bounds(build_tilings(x, y), args.saddle_grid)
    out.write(format_saddle_report(rep))
    ok &= rep.passed
    if not rep.passed:
        print("verification failed: " + "; ".join(rep.violations()), file=sys.stderr)
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bandscan", description="Scanner/Invader bandwidth game solver")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("solve", help="closed-form equilibrium for a config")
    s.add_argument("--config", required=True)
    s.add_argument("--q", type=float)
    s.add_argument("--F", type=float, help="override the fine")
    s.add_argument("--regime", choices=(KNOWN, UNKNOWN))
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("sweep", help="equilibria along F or q, as CSV")
    s.add_argument("--config", required=True)
    s.add_argument("--param", required=True, choices=("F", "q"))
    s.add_argument("--from", dest="start", type=float, required=True)
    s.add_argument("--to", dest="stop", type=float, required=True)
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--regime", choices=(KNOWN, UNKNOWN))
    s.add_argument("--out", help="write CSV here instead of stdout")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("simulate", help="Monte-Carlo detection rate of the tilings")
    s.add_argument("--x", type=float)
    s.add_argument("--y", type=float)
    s.add_argument("--tiling", help="tiling record written by a previous run")
    s.add_argument("--trials", type=int, default=1_000_000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("verify", help="grid certificate and tiling bound check")
    s.add_argument("--config")
    s.add_argument("--grid", type=int, default=2001)
    s.add_argument("--q", type=float)
    s.add_argument("--F", type=float)
    s.add_argument("--regime", choices=(KNOWN, UNKNOWN))
    s.add_argument("--x", type=float, help="candidate x instead of the solver's")
    s.add_argument("--y", type=float, help="candidate y instead of the solver's")
    s.add_argument("--saddle-grid", type=int, default=10_000)
    s.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as err:
        parser.print_usage(sys.stderr)
        print(f"bandscan: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (ParameterError, OSError) as err:
        print(f"bandscan: {err}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
