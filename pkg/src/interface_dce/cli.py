"""
Command line interface.

    interface-dce run --scenario <path|fig3|fig4> [--method M] [--out PATH|-]
                      [--svg PATH] [--quad-order N] [--threads N]
    interface-dce rules --order N
    interface-dce selftest

Exit status: 0 success, 1 usage or input error, 2 numeric-regime error.
"""
from __future__ import annotations

import argparse
import sys

from . import selftest
from .errors import DceError, SingularInterfaceError, UnsupportedRegimeError
from .quadrature import gauss_legendre
from .scenarios_io import load_scenario, render_svg, write_csv
from .spectrum import METHODS, run_scenario

EXIT_USAGE = 1
EXIT_REGIME = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="interface-dce",
                     description="Photon spectra from a simulated moving dielectric interface.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="compute the spectra of a scenario")
    run.add_argument("--scenario", required=True, help="scenario file, or a bundled name (fig3, fig4)")
    run.add_argument("--method", choices=METHODS, help="override the scenario's method")
    run.add_argument("--out", help="CSV destination, '-' for stdout")
    run.add_argument("--svg", help="write an SVG plot here")
    run.add_argument("--quad-order", type=int, help="override the Gauss-Legendre order")
    run.add_argument("--threads", type=int, default=1, help="grid points evaluated in parallel")

    rules = sub.add_parser("rules", help="print Gauss-Legendre nodes and weights")
    rules.add_argument("--order", type=int, required=True)

    sub.add_parser("selftest", help="run the built-in invariant checks")
    return parser


def _run(args, out, err):
    try:
        sf = load_scenario(args.scenario)
    except OSError as exc:
        print(f"error: cannot read scenario {args.scenario!r}: {exc}", file=err)
        return EXIT_USAGE
    sf = sf.with_overrides(method=args.method, quad_order=args.quad_order)
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")

    results = [run_scenario(sc, workers=args.threads) for sc in sf.scenarios()]
    if args.out:
        write_csv(results, args.out)
    if args.svg:
        render_svg(results, args.svg, title=sf.name)

    summary = err if args.out == "-" else out
    for res in results:
        y_peak, d_peak = res.peak()
        print(f"{sf.name} {res.label}: method={res.method} peak_y={y_peak:.6g} "
              f"peak_density={d_peak:.6e} max_imag_residual={res.max_imag_residual:.3e}", file=summary)
    return 0


def _rules(args, out):
    rule = gauss_legendre(args.order)
    for x, w in zip(rule.nodes, rule.weights):
        print(f"{x + 0.0:.16e} {w:.16e}", file=out)
    return 0


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "run":
            return _run(args, out, err)
        if args.command == "rules":
            return _rules(args, out)
        return 0 if selftest.run(stream=out) else 1
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except (UnsupportedRegimeError, SingularInterfaceError) as exc:
        print(f"numeric regime error: {exc}", file=err)
        return EXIT_REGIME
    except (DceError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
