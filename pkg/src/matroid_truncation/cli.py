"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (reported on stderr as
``ERROR <code>: <message>``), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from . import formats
from .errors import ParseError, TruncationError
from .field import element_of_order, parse_field, primitive_element
from .fxmatrix import independent_columns_fx, independent_f
from .repset import repset_basis, repset_spanning
from .truncation import embed_finite, randomized_truncation, truncate


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _field_override(args):
    return parse_field(args.field) if getattr(args, "field", None) else None


def _cols(text: str) -> list:
    try:
        cols = [int(t) - 1 for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"bad column list {text!r}") from None
    if any(c < 0 for c in cols):
        raise ParseError("columns are numbered from 1")
    return cols


def cmd_truncate(args) -> str:
    M, labels = formats.parse_matrix(_read(args.input), _field_override(args))
    if args.seed is not None:
        return formats.format_matrix(randomized_truncation(M, args.k, args.seed), labels)
    T = truncate(M, args.k)
    if args.embed_degree is not None:
        return formats.format_matrix(embed_finite(T, args.embed_degree or None), labels)
    return formats.format_truncation(T)


def cmd_embed(args) -> str:
    T = formats.parse_truncation(_read(args.input))
    return formats.format_matrix(embed_finite(T, args.embed_degree))


def cmd_independent(args) -> str:
    text = _read(args.input)
    cols = _cols(args.cols)
    if formats.is_polymatrix_text(text):
        M = formats.parse_polymatrix(text, _field_override(args))
        ok = independent_columns_fx(M, cols)
    else:
        M, _ = formats.parse_matrix(text, _field_override(args))
        ok = independent_f(M, cols)
    return "true\n" if ok else "false\n"


def cmd_repset(args) -> str:
    A, labels = formats.parse_matrix(_read(args.input), _field_override(args))
    labels = labels or [str(i + 1) for i in range(A.ncols)]
    family = formats.parse_family(_read(args.family), labels)
    compute = repset_basis if args.variant == "basis" else repset_spanning
    return formats.format_family(compute(A, family, args.q), labels)


def cmd_field_info(args) -> str:
    F = parse_field(args.field, args.modulus.split(",") if args.modulus else None)
    out = [f"field {F}", f"characteristic {F.characteristic}"]
    if F.is_finite:
        out.append(f"size {F.size}")
    if F.modulus is not None:
        out.append("modulus " + " ".join(str(c) for c in F.modulus))
    if F.is_finite:
        out.append(f"primitive {primitive_element(F)}")
        if args.order_above is not None:
            out.append(f"order_above {args.order_above} {element_of_order(F, args.order_above)}")
    return "\n".join(out) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroid-truncation",
        description="Deterministic matroid truncation and representative families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("truncate", help="k-truncation of a matrix file")
    p.add_argument("--in", dest="input", required=True, help="matrix file ('-' for stdin)")
    p.add_argument("--k", type=int, required=True, help="truncation rank")
    p.add_argument("--field", help="override the field line of the input (Q | p | p^l)")
    p.add_argument(
        "--embed-degree",
        type=int,
        help="emit a plain matrix over an extension of this degree (0 picks n*k)",
    )
    p.add_argument("--seed", type=int, help=argparse.SUPPRESS)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(run=cmd_truncate)

    p = sub.add_parser("embed", help="embed a truncation file over a finite extension")
    p.add_argument("--in", dest="input", required=True, help="truncation file")
    p.add_argument("--embed-degree", type=int, help="extension degree (default: n*k)")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(run=cmd_embed)

    p = sub.add_parser("independent", help="test independence of columns")
    p.add_argument("--in", dest="input", required=True, help="matrix or polynomial-matrix file")
    p.add_argument("--cols", required=True, help="comma-separated column numbers, from 1")
    p.add_argument("--field", help="override the field line of the input")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(run=cmd_independent)

    p = sub.add_parser("repset", help="q-representative subfamily")
    p.add_argument("--in", dest="input", required=True, help="matroid (matrix) file")
    p.add_argument("--family", required=True, help="family file")
    p.add_argument("--q", type=int, required=True, help="size bound of the extender sets Y")
    p.add_argument(
        "--variant",
        choices=("basis", "spanning"),
        default="basis",
        help="basis: at most C(p+q,p) sets; spanning: lightest sets, at most n*p*C(p+q,p) (default: basis)",
    )
    p.add_argument("--field", help="override the field line of the input")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(run=cmd_repset)

    p = sub.add_parser("field-info", help="describe a field")
    p.add_argument("--field", required=True, help="Q | p | p^l")
    p.add_argument("--modulus", help="comma-separated modulus coefficients c0,...,cl")
    p.add_argument("--order-above", type=int, help="also report the first element of order > N")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(run=cmd_field_info)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        output = args.run(args)
    except ParseError as e:
        print(f"ERROR {e.code}: {e}", file=sys.stderr)
        return 2
    except TruncationError as e:
        print(f"ERROR {e.code}: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"ERROR IO: {e}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
