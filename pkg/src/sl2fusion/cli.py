"""Command-line front end.

Exit codes: 0 success, 1 selfcheck failure, 2 invalid arguments, 3 internal
consistency error.  Results go to stdout, diagnostics to stderr.
"""

import argparse
import json
import sys

from . import chebyshev, demazure, hall_littlewood, kostka
from .characters import graded_character
from .errors import ConsistencyError
from .partitions import Partition
from .selfcheck import run_selfcheck


def _partition_arg(text):
    try:
        return Partition.from_string(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument(
        "--quiet", action="store_true", help="suppress informational output"
    )

    parser = argparse.ArgumentParser(
        prog="sl2fusion",
        description="Exact Demazure flag multiplicities, Kostka-Foulkes "
        "polynomials, and graded characters of sl2[t] fusion products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cheby = sub.add_parser("cheby", parents=[common], help="coefficients of a Chebyshev factor")
    cheby.add_argument("--n", type=int, required=True)
    cheby.add_argument("--closed-form", action="store_true", help="use the binomial sum route")
    cheby.set_defaults(handler=_cmd_cheby)

    flag = sub.add_parser("flag", parents=[common], help="flag multiplicities of a fusion product")
    flag.add_argument("--xi", type=_partition_arg, required=True)
    flag.add_argument("--level", type=int, required=True)
    flag.add_argument("--n", type=int, default=None)
    flag.add_argument(
        "--numeric", action="store_true", help="numerical multiplicities via the series route"
    )
    flag.set_defaults(handler=_cmd_flag)

    weyl = sub.add_parser("weyl-series", parents=[common], help="multiplicity generating series")
    weyl.add_argument("--n", type=int, required=True)
    weyl.add_argument("--level", type=int, required=True)
    weyl.add_argument("--order", type=int, required=True)
    weyl.set_defaults(handler=_cmd_weyl)

    kost = sub.add_parser("kostka", parents=[common], help="Kostka-Foulkes polynomials")
    kost.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    kost.add_argument("--mu", type=_partition_arg, required=True)
    kost.add_argument("--method", choices=("rec", "jing", "charge"), default="rec")
    kost.add_argument("--cocharge", action="store_true", help="return the cocharge variant")
    kost.set_defaults(handler=_cmd_kostka)

    char = sub.add_parser("character", parents=[common], help="graded character table")
    char.add_argument("--xi", type=_partition_arg, required=True)
    char.set_defaults(handler=_cmd_character)

    check = sub.add_parser("selfcheck", parents=[common], help="run the identity suites")
    check.add_argument("--max-weight", type=int, default=10)
    check.set_defaults(handler=_cmd_selfcheck)

    return parser


def _cmd_cheby(args):
    poly = chebyshev.cheb_closed(args.n) if args.closed_form else chebyshev.cheb(args.n)
    if args.format == "json":
        print(json.dumps({"n": args.n, "variable": "x", "poly": poly.to_json()}))
    else:
        print(poly.format("x"))
    return 0


def _cmd_flag(args):
    if args.n is not None:
        if args.numeric:
            value = chebyshev.numerical_multiplicity(args.xi, args.level, args.n)
            payload = {"value": value}
            text = str(value)
        else:
            poly = demazure.graded_multiplicity(args.xi, args.level, args.n)
            payload = {"poly": poly.to_json()}
            text = poly.format("q")
        if args.format == "json":
            payload.update({"xi": str(args.xi), "level": args.level, "n": args.n})
            print(json.dumps(payload))
        else:
            print(text)
        return 0
    table = demazure.flag_table(args.xi, args.level)
    if args.numeric:
        numeric = {n: poly.evaluate(1) for n, poly in table.items()}
        if args.format == "json":
            print(json.dumps({
                "xi": str(args.xi),
                "level": args.level,
                "table": [[n, numeric[n]] for n in sorted(numeric)],
            }))
        else:
            for n in sorted(numeric, reverse=True):
                print("n=%d: %d" % (n, numeric[n]))
        return 0
    if args.format == "json":
        print(json.dumps({
            "xi": str(args.xi),
            "level": args.level,
            "table": [[n, table[n].to_json()] for n in sorted(table)],
        }))
    else:
        for n in sorted(table, reverse=True):
            print("n=%d: %s" % (n, table[n].format("q")))
    return 0


def _cmd_weyl(args):
    series = chebyshev.weyl_generating_series(args.n, args.level, args.order)
    if args.format == "json":
        print(json.dumps({
            "n": args.n,
            "level": args.level,
            "order": args.order,
            "coeffs": list(series.coeffs()),
        }))
    else:
        print(" ".join(str(c) for c in series.coeffs()))
    return 0


def _kostka_poly(lam, mu, method, cocharge):
    bound = mu.weighted_size()
    if method == "rec":
        tilde = kostka.cocharge_kostka(lam, mu)
        return tilde if cocharge else tilde.reverse(bound)
    if method == "jing":
        if cocharge:
            return hall_littlewood.cocharge_by_operators(lam, mu)
        return hall_littlewood.kostka_by_operators(lam, mu)
    plain = kostka.kostka_by_charge(lam, mu)
    return plain.reverse(bound) if cocharge else plain


def _cmd_kostka(args):
    poly = _kostka_poly(args.lam, args.mu, args.method, args.cocharge)
    if args.format == "json":
        print(json.dumps({
            "lambda": str(args.lam),
            "mu": str(args.mu),
            "method": args.method,
            "cocharge": args.cocharge,
            "poly": poly.to_json(),
        }))
    else:
        print(poly.format("q"))
    return 0


def _cmd_character(args):
    character = graded_character(args.xi)
    if args.format == "json":
        print(json.dumps({"xi": str(args.xi), "character": character.to_json()}))
    else:
        for z in sorted(character.support(), reverse=True):
            print("z^%d: %s" % (z, character.coeff(z).format("q")))
    return 0


def _cmd_selfcheck(args):
    report = run_selfcheck(args.max_weight)
    ok = all(not failures for _, failures in report)
    if args.format == "json":
        print(json.dumps({
            "max_weight": args.max_weight,
            "ok": ok,
            "suites": [
                {"name": name, "ok": not failures, "failures": failures}
                for name, failures in report
            ],
        }))
    else:
        for name, failures in report:
            if not args.quiet or failures:
                print("%s %s" % ("PASS" if not failures else "FAIL", name))
            for line in failures:
                print("  %s" % line, file=sys.stderr)
        passed = sum(1 for _, failures in report if not failures)
        if not args.quiet:
            print("selfcheck: %d/%d suites passed" % (passed, len(report)))
    return 0 if ok else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ConsistencyError as exc:
        print("internal consistency error: %s" % exc, file=sys.stderr)
        return 3
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
