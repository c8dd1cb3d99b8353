"""Command-line front end.

Subcommands: check, realize, eigen, verify, gram, reduce.  Exit codes:
0 success/realizable, 2 not realizable, 3 parse error, 4 validation or
certificate failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bilinear import gauss_reduce
from .errors import (
    Char2SymError,
    NotRealizableError,
    ParseError,
)
from .factor import decomposition_for
from .fields import field_from_spec
from .linalg import matrix_from_strings, render_matrix
from .parsing import parse_poly
from .realize import (
    decide,
    non_realizability_witness,
    realize,
    realize_eigen,
    verify,
)
from .transfer import (
    even_form,
    insep_power_form,
    point_form,
    sep_power_form,
    square_block_form,
)

EXIT_OK = 0
EXIT_NOT_REALIZABLE = 2
EXIT_PARSE = 3
EXIT_INVALID = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="char2sym",
        description=(
            "Decide whether a monic polynomial over a characteristic-2 "
            "field is the minimal polynomial of a symmetric matrix, and "
            "construct one when it is."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, poly=True, factors=True):
        p.add_argument("--field", required=True, help="field spec, e.g. gf2, gf(2^4), f2(t)")
        if poly:
            p.add_argument("--poly", required=True, help="monic polynomial in x")
        if factors:
            p.add_argument(
                "--factors",
                help="factored form '(p1)^m1 * (p2)^m2 ...' "
                "(required over function fields)",
            )
        p.add_argument("--seed", type=int, default=None, help="factorization seed")
        p.add_argument("--json", action="store_true", help="JSON output")

    p = sub.add_parser("check", help="decide realizability")
    common(p)

    p = sub.add_parser("realize", help="construct a symmetric matrix with min poly f")
    common(p)
    p.add_argument(
        "--paper-pairing",
        action="store_true",
        help="reduce per block, pairing the even block with the last unit block",
    )
    p.add_argument(
        "--square-block",
        action="store_true",
        help="use the dual-of-1 form when the even part is a square with "
        "nonzero constant term",
    )

    p = sub.add_parser("eigen", help="symmetric matrix with a given eigenvalue")
    common(p)
    p.add_argument("--paper-pairing", action="store_true")

    p = sub.add_parser("verify", help="verify a matrix against a polynomial")
    common(p, factors=False)
    p.add_argument("--matrix", required=True, help="JSON matrix file")
    p.add_argument(
        "--mode",
        choices=["minpoly", "charpoly", "eigen"],
        default="minpoly",
    )

    p = sub.add_parser("gram", help="print the transfer Gram of a named form")
    p.add_argument("--field", required=True)
    p.add_argument(
        "--form",
        required=True,
        choices=["point", "even", "square", "sep-power", "insep-power"],
    )
    p.add_argument("--poly", help="modulus for even/square forms")
    p.add_argument("--pi", help="separable core for power forms")
    p.add_argument("--depth", type=int, default=0, help="inseparability depth n")
    p.add_argument("--mult", type=int, default=1, help="multiplicity m")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("reduce", help="Gauss-reduce a symmetric Gram matrix")
    p.add_argument("--field", required=True)
    p.add_argument("--matrix", required=True, help="JSON matrix file")
    p.add_argument("--json", action="store_true")
    return parser


def _load_matrix(field, path):
    with open(path, "r", encoding="utf-8") as handle:
        rows = json.load(handle)
    return matrix_from_strings(field, rows)


def _print_matrix(rows, indent="  "):
    rendered = [[cell for cell in row] for row in rows]
    widths = [
        max(len(rendered[i][j]) for i in range(len(rendered)))
        for j in range(len(rendered[0]))
    ]
    for row in rendered:
        cells = "  ".join(cell.rjust(w) for cell, w in zip(row, widths))
        print(f"{indent}[{cells}]")


def _decomposition(args, f):
    kwargs = {}
    if args.seed is not None:
        kwargs["seed"] = args.seed
    return decomposition_for(f, args.factors, **kwargs)


def _cmd_check(args) -> int:
    field = field_from_spec(args.field)
    f = parse_poly(field, args.poly)
    fd = _decomposition(args, f)
    realizable = decide(fd)
    witness = None if realizable else non_realizability_witness(fd)
    if args.json:
        print(
            json.dumps(
                {
                    "field": args.field,
                    "f": str(f),
                    "realizable": realizable,
                    "factors": str(fd),
                    "witness": witness,
                },
                indent=2,
            )
        )
    elif realizable:
        print(f"Realizable: {fd}")
    else:
        print(f"NotRealizable: {witness}")
    return EXIT_OK if realizable else EXIT_NOT_REALIZABLE


def _cmd_realize(args, eigen: bool) -> int:
    field = field_from_spec(args.field)
    f = parse_poly(field, args.poly)
    fd = _decomposition(args, f)
    if eigen:
        result = realize_eigen(f, fd, paper_pairing=args.paper_pairing)
    else:
        result = realize(
            f,
            fd,
            paper_pairing=args.paper_pairing,
            square_block=args.square_block,
        )
    if args.json:
        print(json.dumps(result.to_json(), indent=2))
        return EXIT_OK
    print(f"case: {result.case}")
    blocks = ", ".join(
        f"{b.modulus} [{b.claim}]" for b in result.form.blocks
    )
    print(f"blocks: {blocks}")
    print(f"size: {result.size}")
    if result.eigen_needs_extra_dimension:
        print(
            "note: inseparable minimal polynomial; no symmetric matrix of "
            f"size {f.degree} has this eigenvalue, using size {result.size}"
        )
    print("M:")
    _print_matrix(render_matrix(result.matrix))
    print(f"min poly:  {result.min_polynomial}")
    print(f"char poly: {result.char_polynomial}")
    cert = result.certificate
    print(
        f"certificate: symmetric={cert.symmetric} "
        f"min_poly_ok={cert.min_poly_ok} char_poly_ok={cert.char_poly_ok}"
    )
    return EXIT_OK


def _cmd_verify(args) -> int:
    field = field_from_spec(args.field)
    f = parse_poly(field, args.poly)
    matrix = _load_matrix(field, args.matrix)
    report = verify(matrix, f, args.mode)
    if args.json:
        print(
            json.dumps(
                {
                    "mode": report.mode,
                    "symmetric": report.symmetric,
                    "min_poly": str(report.min_polynomial),
                    "char_poly": str(report.char_polynomial),
                    "matches": report.matches,
                    "ok": report.ok,
                },
                indent=2,
            )
        )
    else:
        print(f"symmetric: {report.symmetric}")
        print(f"min poly:  {report.min_polynomial}")
        print(f"char poly: {report.char_polynomial}")
        print(f"{args.mode} check: {'pass' if report.ok else 'FAIL'}")
    return EXIT_OK if report.ok else EXIT_INVALID


def _cmd_gram(args) -> int:
    field = field_from_spec(args.field)
    if args.form == "point":
        form = point_form(field)
    elif args.form in ("even", "square"):
        if not args.poly:
            raise ParseError(f"--poly is required for --form {args.form}")
        g = parse_poly(field, args.poly)
        form = even_form(g) if args.form == "even" else square_block_form(g)
    else:
        if not args.pi:
            raise ParseError(f"--pi is required for --form {args.form}")
        pi = parse_poly(field, args.pi)
        if args.form == "sep-power":
            form = sep_power_form(pi, args.mult)
        else:
            form = insep_power_form(pi, args.depth, args.mult)
    gram = render_matrix(form.gram())
    if args.json:
        print(
            json.dumps(
                {"form": form.to_json(), "gram": gram},
                indent=2,
            )
        )
    else:
        for block in form.blocks:
            print(f"block {block.modulus} [{block.claim}]")
        print("gram:")
        _print_matrix(gram)
    return EXIT_OK


def _cmd_reduce(args) -> int:
    field = field_from_spec(args.field)
    matrix = _load_matrix(field, args.matrix)
    red = gauss_reduce(matrix)
    if args.json:
        print(
            json.dumps(
                {
                    "rank": red.rank,
                    "U": render_matrix(red.u),
                    "Q": render_matrix(red.q),
                    "P": render_matrix(red.p),
                },
                indent=2,
            )
        )
    else:
        print(f"rank: {red.rank}")
        print("U (rows are the peeled forms):")
        if red.u:
            _print_matrix(render_matrix(red.u))
        print("Q (invertible completion, Q^t Q = S when full rank):")
        _print_matrix(render_matrix(red.q))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    try:
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "realize":
            return _cmd_realize(args, eigen=False)
        if args.command == "eigen":
            return _cmd_realize(args, eigen=True)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "gram":
            return _cmd_gram(args)
        if args.command == "reduce":
            return _cmd_reduce(args)
        raise AssertionError(f"unhandled command {args.command}")
    except NotRealizableError as exc:
        print(f"NotRealizable: {exc}", file=sys.stderr)
        return EXIT_NOT_REALIZABLE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (Char2SymError, ZeroDivisionError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
