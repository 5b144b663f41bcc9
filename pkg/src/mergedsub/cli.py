"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or hypothesis error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath

from . import suite as S
from .constructions import NAMED_OPS, MergedTriple, merged_subdivision, named_op
from .errors import GraphIOError, MergedSubError
from .exact import char_poly, kirchhoff_exact, spanning_tree_count
from .graph import MATRIX_KINDS, matrix_of
from .io import parse_graph, write_graph
from .numeric import DEFAULT_TOL, cluster, spectrum_of
from .poly import ExactPolynomial

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _rational(q) -> dict:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def _formula_inputs(args) -> dict:
    raw = {}
    for key in ("g", "h", "g2"):
        if getattr(args, key, None) is not None:
            raw[key] = getattr(args, key)
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise MergedSubError(f"--param expects key=value, got {item!r}")
        raw[key.strip()] = value.strip()
    return raw


def _add_formula_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--formula", help="formula id or alias (e.g. cor3.1.2, merged.L.plain)")
    p.add_argument("--g", help="graph file or family spec such as cycle:4")
    p.add_argument("--h", help="second graph")
    p.add_argument("--param", action="append", metavar="KEY=VALUE", help="integer or rational input")


def cmd_construct(args) -> int:
    g = parse_graph(args.g)
    if args.op == "merged":
        if args.h1 is None or args.h2 is None:
            raise MergedSubError("op 'merged' needs --h1 and --h2")
        out = merged_subdivision(MergedTriple(g, parse_graph(args.h1), parse_graph(args.h2)))
    else:
        h = parse_graph(args.h1) if args.h1 else None
        out = named_op(args.op, g, h)
    if args.output:
        write_graph(out, args.output)
    else:
        _emit(out.to_json())
    return EXIT_OK


def cmd_spectrum(args) -> int:
    if args.method == "oracle":
        if args.graph is None:
            raise MergedSubError("spectrum --method oracle needs a graph file")
        _emit(spectrum_of(parse_graph(args.graph), args.matrix).to_json())
        return EXIT_OK
    if not args.formula:
        raise MergedSubError("spectrum --method closed-form needs --formula")
    value = S.closed_value(args.formula, _formula_inputs(args))
    if isinstance(value, ExactPolynomial):
        value = value.real_roots()
    _emit(cluster(value).to_json())
    return EXIT_OK


def cmd_charpoly(args) -> int:
    if args.formula:
        poly = S.closed_value(args.formula, _formula_inputs(args))
        if not isinstance(poly, ExactPolynomial):
            raise MergedSubError(f"{args.formula} is not a characteristic-polynomial formula")
    else:
        if args.graph is None:
            raise MergedSubError("charpoly needs a graph file or --formula")
        poly = char_poly(matrix_of(parse_graph(args.graph), args.matrix))
    _emit(poly.to_json())
    return EXIT_OK


def _invariant(args, quantity: str) -> int:
    oracle_fn = spanning_tree_count if quantity == "tau" else kirchhoff_exact
    if args.method == "oracle" and args.graph is not None:
        _emit({quantity: _rational(oracle_fn(parse_graph(args.graph)))})
        return EXIT_OK
    if not args.formula:
        raise MergedSubError(f"{quantity} --method {args.method} needs --formula")
    f = S.get_formula(args.formula)
    expected = "tau" if quantity == "tau" else "kirchhoff"
    if f.quantity != expected:
        raise MergedSubError(f"{f.id} computes {f.quantity}, not {expected}")
    raw = _formula_inputs(args)
    if args.method == "closed-form":
        value = S.closed_value(args.formula, raw)
        if isinstance(value, mpmath.mpf):
            _emit({quantity: mpmath.nstr(value, 30)})
        else:
            _emit({quantity: _rational(value)})
        return EXIT_OK
    if args.method == "oracle":
        _emit({quantity: _rational(S.oracle_value(args.formula, raw))})
        return EXIT_OK
    result = S.verify_invariants(args.formula, raw)
    _emit(result.to_json())
    return EXIT_OK if result.agrees else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.suite in S.BUILTIN_SUITES:
        cases = S.BUILTIN_SUITES[args.suite]()
    else:
        cases = S.load_suite(args.suite)
    summary = S.run_verify(cases, jobs=args.jobs, tol=args.tol)
    if args.format == "json":
        _emit(summary.to_json())
    else:
        print(summary.table())
    return EXIT_OK if summary.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mergedsub", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build a merged subdivision or a named operation")
    p.add_argument("--op", required=True, help=f"'merged' or one of: {', '.join(NAMED_OPS)}")
    p.add_argument("--g", required=True)
    p.add_argument("--h1")
    p.add_argument("--h2")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_construct)

    p = sub.add_parser("spectrum", help="spectrum from the oracle or a closed form")
    p.add_argument("graph", nargs="?")
    p.add_argument("--matrix", choices=sorted(MATRIX_KINDS), default="laplacian")
    p.add_argument("--method", choices=("oracle", "closed-form"), default="oracle")
    _add_formula_args(p)
    p.set_defaults(run=cmd_spectrum)

    p = sub.add_parser("charpoly", help="exact characteristic polynomial")
    p.add_argument("graph", nargs="?")
    p.add_argument("--matrix", choices=sorted(MATRIX_KINDS), default="adjacency")
    _add_formula_args(p)
    p.set_defaults(run=cmd_charpoly)

    for name in ("tau", "kirchhoff"):
        p = sub.add_parser(name, help=f"{'spanning-tree count' if name == 'tau' else 'Kirchhoff index'}")
        p.add_argument("graph", nargs="?")
        p.add_argument("--method", choices=("closed-form", "oracle", "verify"), default="oracle")
        _add_formula_args(p)
        p.set_defaults(run=lambda a, q=name: _invariant(a, q))

    p = sub.add_parser("verify", help="run a closed-form-vs-oracle suite")
    p.add_argument("--suite", default="paper-core", help="built-in suite name or JSON file")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--tol", type=float, default=None, help=f"default tolerance (else {DEFAULT_TOL:g})")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except GraphIOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except MergedSubError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
