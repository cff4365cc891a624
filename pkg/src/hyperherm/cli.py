"""Command-line front end.

Subcommands:
  analyze    run the full family pipeline for concrete or symbolic parameters
  verify     run the batched identity suites, one PASS/FLAG/FAIL line each
  decompose  split a bilinear form into its four projector components

Exit codes: 0 success (expected flags only), 1 usage error, 2 verification
failure, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import report, spaces, verify
from .liealg import InvariantViolation
from .linalg import Matrix
from .rings import parse_rational, scalar_str

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_INVARIANT = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; this tool reserves 2
    # for verification failures, so usage problems are remapped to 1
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="hyperherm", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="analyze one family member")
    group = p_an.add_mutually_exclusive_group(required=True)
    group.add_argument("--lambda", dest="lam", metavar="l1,l2,l3,l4",
                       help="four exact rationals, e.g. 1,2/3,-2,1")
    group.add_argument("--symbolic", action="store_true",
                       help="keep the four parameters symbolic")
    p_an.add_argument("--format", choices=("json", "text"), default="text")

    p_ver = sub.add_parser("verify", help="run the full identity suite")
    p_ver.add_argument("--strict", action="store_true",
                       help="treat expected flags as failures")
    p_ver.add_argument("--skip", action="append", default=[], metavar="SUITE",
                       help=f"suite to skip (repeatable); one of: {', '.join(verify.SUITES)}")

    p_dec = sub.add_parser("decompose", help="projector decomposition of a bilinear form")
    p_dec.add_argument("--n", type=int, required=True, help="the form lives on R^(4n)")
    group = p_dec.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", help="path to a whitespace-separated rational matrix")
    group.add_argument("--seed", type=int, help="generate a random rational form")
    p_dec.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _parse_lambda(text: str) -> tuple:
    tokens = text.split(",")
    if len(tokens) != 4:
        raise UsageError(f"--lambda needs exactly four comma-separated values, got {len(tokens)}")
    try:
        return tuple(parse_rational(t) for t in tokens)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cmd_analyze(args) -> int:
    lam = None if args.symbolic else _parse_lambda(args.lam)
    fa = report.run_family_analysis(lam)
    doc = report.build_document(fa)
    if args.format == "json":
        sys.stdout.write(report.to_json(doc))
    else:
        sys.stdout.write(report.to_text(doc))
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        items = verify.run_suites(skip=args.skip)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    summary = verify.summarize(items, strict=args.strict)
    for item in summary.items:
        print(f"{item.status} {item.key}: {item.detail}")
    print(
        f"summary: {len(summary.items)} items, {len(summary.failures)} failures, "
        f"{len(summary.flags)} flags ({len(summary.unexpected_flags)} unexpected)"
    )
    return EXIT_OK if summary.clean else EXIT_VERIFY


def _read_matrix(path: str, dim: int) -> Matrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            rows = [line.split() for line in fh if line.strip()]
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise UsageError(f"expected a {dim}x{dim} matrix in {path}")
    try:
        return Matrix([[parse_rational(tok) for tok in row] for row in rows])
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _random_form(seed: int, dim: int) -> Matrix:
    rng = random.Random(seed)
    return Matrix.from_function(
        dim, dim, lambda i, j: Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    )


def _cmd_decompose(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be a positive integer")
    dim = 4 * args.n
    if args.input is not None:
        form = _read_matrix(args.input, dim)
        source = {"kind": "file", "path": args.input}
    else:
        form = _random_form(args.seed, dim)
        source = {"kind": "seed", "seed": args.seed}
    h = spaces.standard_structure(args.n)
    parts = [spaces.project(form, h, alpha) for alpha in range(4)]
    total = parts[0] + parts[1] + parts[2] + parts[3]

    def matrix_doc(m: Matrix):
        return [[scalar_str(v) for v in row] for row in m.rows]

    doc = {
        "n": args.n,
        "source": source,
        "input": matrix_doc(form),
        "projections": {
            f"Pi{alpha}": {
                "matrix": matrix_doc(part),
                "memberships": sorted(spaces.hermitian_type(part, h).memberships),
                "type": spaces.hermitian_type(part, h).label,
            }
            for alpha, part in enumerate(parts)
        },
        "reconstruction_exact": total == form,
    }
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        lines = [f"projector decomposition on R^{dim} (n={args.n})"]
        for alpha in range(4):
            p = doc["projections"][f"Pi{alpha}"]
            lines.append(f"Pi{alpha}: {p['type']}, memberships {p['memberships']}")
            for row in p["matrix"]:
                lines.append("  " + "  ".join(row))
        lines.append(f"reconstruction exact: {doc['reconstruction_exact']}")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "decompose":
            return _cmd_decompose(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
