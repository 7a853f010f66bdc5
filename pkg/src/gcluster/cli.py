"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
3 disagreement between methods, 4 resource guard.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import complex as cx
from .cartan import CartanData, format_root, parse_type, root_system
from .colored import colored_roots, parse_colored_root
from .compat import is_compatible_colored, is_compatible_colored_oracle
from .errors import GCCError, NotAlternating, NotSimplyLaced, ParseError, VertexCapExceeded
from .quiver import alternating_orientation, parse_orientation
from .repcat import ClusterCategory
from .verify import run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_MISMATCH, EXIT_GUARD = 0, 1, 2, 3, 4


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _cartan(text: str) -> CartanData:
    try:
        return parse_type(text)
    except GCCError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gcluster",
        description="Generalized cluster complexes of finite root systems.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("roots", help="list positive, almost positive or colored roots")
    r.add_argument("--type", required=True, type=_cartan, dest="cartan")
    r.add_argument("--d", type=_positive_int, help="list colored roots with d colors")
    r.add_argument("--almost-positive", action="store_true",
                   help="include the negative simple roots")
    r.add_argument("--format", choices=("text", "json"), default="text")

    c = sub.add_parser("compat", help="decide compatibility of two colored roots")
    c.add_argument("--type", required=True, type=_cartan, dest="cartan")
    c.add_argument("--d", type=_positive_int, default=1)
    c.add_argument("x", help='colored root such as "a1+a2:2" or "-a1:1"')
    c.add_argument("y")
    c.add_argument("--oracle", action="store_true", help="also run the five-case definition")
    c.add_argument("--categorical", action="store_true",
                   help="also compute the Ext-degree in the d-cluster category")

    x = sub.add_parser("complex", help="build the generalized cluster complex")
    x.add_argument("--type", required=True, type=_cartan, dest="cartan")
    x.add_argument("--d", type=_positive_int, default=1)
    x.add_argument("--orientation", default="alternating",
                   help='"alternating", "linear" or arrows like "1>2,3>2"')
    x.add_argument("--predicate", choices=cx.PREDICATES, default="combinatorial")
    x.add_argument("--format", choices=("json", "dot", "text"), default="text")
    x.add_argument("--vertex-cap", type=_positive_int, default=cx.DEFAULT_VERTEX_CAP)
    x.add_argument("--output", "-o", help="write to a file instead of stdout")

    v = sub.add_parser("verify", help="run the theorem checks")
    v.add_argument("--type", required=True, type=_cartan, dest="cartan")
    v.add_argument("--d", type=_positive_int, default=1)
    v.add_argument("--all", action="store_true", help="check every d' from 1 to d")

    h = sub.add_parser("hom-table", help="export Hom or Ext^i tables of C_d as JSON")
    h.add_argument("--type", required=True, type=_cartan, dest="cartan")
    h.add_argument("--d", type=_positive_int, default=1)
    h.add_argument("--orientation", default="alternating")
    h.add_argument("--ext", type=int, default=0, metavar="I",
                   help="export Ext^I instead of Hom")
    return p


def cmd_roots(args, out) -> int:
    cartan = args.cartan
    if args.d:
        items = colored_roots(cartan, args.d)
        if args.format == "json":
            json.dump([v.to_json() for v in items], out)
            out.write("\n")
        else:
            out.writelines(f"{v}\n" for v in items)
        return EXIT_OK
    rs = root_system(cartan)
    roots = rs.almost_positive_roots if args.almost_positive else rs.positive_roots
    if args.format == "json":
        json.dump([list(r) for r in roots], out)
        out.write("\n")
    else:
        out.writelines(f"{format_root(r)}\n" for r in roots)
    return EXIT_OK


def _verdict(flag: bool) -> str:
    return "compatible" if flag else "incompatible"


def cmd_compat(args, out) -> int:
    cartan, d = args.cartan, args.d
    x = parse_colored_root(args.x, cartan, d)
    y = parse_colored_root(args.y, cartan, d)
    q0 = alternating_orientation(cartan)
    results = {"reduction": is_compatible_colored(q0, d, x, y)}
    out.write(f"type {cartan.type_label}  d={d}  orientation={q0}\n")
    out.write(f"x = {x}   y = {y}\n")
    out.write(f"reduction: {_verdict(results['reduction'])}\n")
    if args.oracle:
        results["oracle"] = is_compatible_colored_oracle(q0, d, x, y)
        out.write(f"oracle: {_verdict(results['oracle'])}\n")
    if args.categorical:
        if cartan.simply_laced:
            deg = ClusterCategory(q0, d).compat_degree(x, y)
            results["categorical"] = deg == 0
            out.write(f"categorical degree: {deg} ({_verdict(deg == 0)})\n")
        else:
            out.write(f"categorical: skipped (valued type {cartan.type_label})\n")
    if len(set(results.values())) > 1:
        out.write("MISMATCH between methods\n")
        return EXIT_MISMATCH
    if len(results) > 1:
        out.write("all methods agree\n")
    return EXIT_OK


def cmd_complex(args, out) -> int:
    cartan = args.cartan
    q = parse_orientation(cartan, args.orientation)
    c = cx.build_complex(q, args.d, args.predicate, vertex_cap=args.vertex_cap)
    if args.format == "json":
        text = cx.to_json(c, cartan) + "\n"
    elif args.format == "dot":
        text = cx.to_dot(c)
    else:
        text = cx.to_text(c, cartan)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    results = run_verify(args.cartan, args.d, all_d=args.all)
    out.write(f"verify type {args.cartan.type_label}  d={args.d}\n")
    for d, chk in results:
        out.write(f"d={d}  {chk.line()}\n")
    failed = sum(1 for _, chk in results if not chk.ok)
    skipped = sum(1 for _, chk in results if chk.status == "skip")
    out.write(f"{len(results) - failed - skipped} passed, {failed} failed, {skipped} skipped\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_hom_table(args, out) -> int:
    q = parse_orientation(args.cartan, args.orientation)
    cat = ClusterCategory(q, args.d)
    out.write(cat.hom_table_json(args.ext) + "\n")
    return EXIT_OK


COMMANDS = {
    "roots": cmd_roots,
    "compat": cmd_compat,
    "complex": cmd_complex,
    "verify": cmd_verify,
    "hom-table": cmd_hom_table,
}


_NEGATIVE_ROOT = re.compile(r"^-\s*a\d")


def _protect_negative_roots(argv: list[str]) -> list[str]:
    # argparse would read "-a1:1" as an option; a leading space keeps it positional
    return [" " + a if _NEGATIVE_ROOT.match(a) else a for a in argv]


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negative_roots(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except VertexCapExceeded as exc:
        print(f"gcluster: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ParseError, NotAlternating, NotSimplyLaced, ValueError) as exc:
        print(f"gcluster: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
