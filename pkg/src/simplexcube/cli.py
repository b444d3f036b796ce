"""Command-line interface: ``simplexcube {certify,sweep,search,hadamard}``.

Exit codes: 0 ok, 1 internal cross-check failure, 2 degenerate simplex,
3 parse or configuration error, 4 unsupported construction.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import constructions as C
from .cube import NotInCubeError, certify
from .documents import DocumentError, dumps_certificate, loads_simplex, search_result_to_dict, trace_csv
from .linalg import format_rational, parse_rational
from .search import SearchConfig, SearchError, local_search
from .simplex import DegenerateSimplexError, alpha_cube, lagrange_basis, xi_cube

EXIT_OK = 0
EXIT_CHECK = 1
EXIT_DEGENERATE = 2
EXIT_PARSE = 3
EXIT_UNSUPPORTED = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which is our "degenerate" code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _range_arg(text: str) -> tuple[Fraction, Fraction]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"range must be LO:HI, got {text!r}")
    a, b = _rational_arg(lo), _rational_arg(hi)
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _float17(x: Fraction) -> str:
    return format(float(x), ".17g")


def cmd_certify(args) -> int:
    if args.builtin:
        s = C.builtin(args.builtin)
    else:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input) as fh:
                text = fh.read()
        s = loads_simplex(text)
    print(dumps_certificate(certify(s, args.xi_n)))
    return EXIT_OK


def _grid(lo: Fraction, hi: Fraction, steps: int) -> list[Fraction]:
    return [lo + (hi - lo) * k / (steps - 1) for k in range(steps)]


def cmd_sweep(args) -> int:
    fam = args.family.upper()
    if fam not in C.FAMILIES:
        raise UsageError(f"unknown family {args.family!r}")
    if args.steps < 2:
        raise UsageError("--steps must be >= 2")
    third = Fraction(1, 3)
    if fam == "R":
        s_lo, s_hi = args.s or (third, 2 * third)
        t_lo, t_hi = args.t or (third, 2 * third)
        points = [(s, t) for s in _grid(s_lo, s_hi, args.steps) for t in _grid(t_lo, t_hi, args.steps)]
    else:
        if args.s is not None:
            raise UsageError(f"family {fam} has no s parameter")
        t_lo, t_hi = args.t or (Fraction(0), Fraction(1))
        points = [(None, t) for t in _grid(t_lo, t_hi, args.steps)]

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["s", "t", "xi", "alpha", "xi_float", "alpha_float"])
    for s, t in points:
        p = C.FamilyParam(fam, t, s)
        cf = C.closed_form(p)
        simplex = C.family_simplex(p)
        xi, alpha = xi_cube(simplex), alpha_cube(lagrange_basis(simplex))
        if (xi, alpha) != (cf.xi, cf.alpha):
            print(f"closed form disagrees with brute force at s={s} t={t}: "
                  f"({cf.xi}, {cf.alpha}) vs ({xi}, {alpha})", file=sys.stderr)
            return EXIT_CHECK
        w.writerow([
            "" if s is None else format_rational(s), format_rational(t),
            format_rational(xi), format_rational(alpha), _float17(xi), _float17(alpha),
        ])
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        cfg = SearchConfig(
            n=args.n, grid_denominator=args.D, restarts=args.restarts, max_steps=args.max_steps,
            seed=args.seed, centroid_lock=args.centroid_lock, kicks=args.kicks,
            kick_size=args.kick_size,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    result = local_search(cfg)
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(trace_csv(result))
    print(json.dumps(search_result_to_dict(result), indent=2))
    return EXIT_OK


def cmd_hadamard(args) -> int:
    h = C.normalize_hadamard(C.hadamard(args.m))
    if not (h.is_valid() and h.is_normalized()):
        print(f"order {args.m}: construction failed self-check", file=sys.stderr)
        return EXIT_CHECK
    for row in h.entries:
        print("".join("+" if x > 0 else "-" for x in row))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="simplexcube", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("certify", help="certificate JSON for a simplex")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", metavar="ID",
                     help="s1, s2, perfect5, sstar:<n>, regular:<n>, R:<s>:<t>, T:<t>, S9:<t>")
    src.add_argument("--input", metavar="PATH", help="SimplexDocument JSON file, '-' for stdin")
    c.add_argument("--xi-n", type=_rational_arg, default=None,
                   help="known minimal xi for this dimension")
    c.set_defaults(func=cmd_certify)

    s = sub.add_parser("sweep", help="CSV of closed-form xi/alpha over a family grid")
    s.add_argument("family", help="R, T or S9")
    s.add_argument("--s", type=_range_arg, default=None, metavar="LO:HI")
    s.add_argument("--t", type=_range_arg, default=None, metavar="LO:HI")
    s.add_argument("--steps", type=int, default=11, help="grid points per parameter")
    s.set_defaults(func=cmd_sweep)

    q = sub.add_parser("search", help="local search for small xi")
    q.add_argument("-n", type=int, required=True)
    q.add_argument("-D", type=int, default=2, help="grid denominator")
    q.add_argument("--restarts", type=int, default=20)
    q.add_argument("--max-steps", type=int, default=400)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--centroid-lock", action="store_true")
    q.add_argument("--kicks", type=int, default=30)
    q.add_argument("--kick-size", type=int, default=3)
    q.add_argument("--trace", metavar="CSV", help="write the improvement trace here")
    q.set_defaults(func=cmd_search)

    h = sub.add_parser("hadamard", help="normalized Hadamard matrix as +/- rows")
    h.add_argument("m", type=int)
    h.set_defaults(func=cmd_hadamard)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # usage errors and --help; return the code rather than exiting the caller
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except DegenerateSimplexError as exc:
        print(f"degenerate simplex: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (C.UnsupportedOrderError, C.UnknownConstructionError) as exc:
        print(f"unsupported construction: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (UsageError, DocumentError, NotInCubeError, SearchError, OSError,
            ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
