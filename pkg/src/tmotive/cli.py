"""Command-line front end: ``tmotive <subcommand> [flags] [files]``.

Exit status is 0 on success, 1 on validation errors and 2 on parse
errors (including malformed command lines).  Every result is printed on
its own line; diagnostics go to stderr as a single line.
"""

from __future__ import annotations

import argparse
import sys

from . import hahn
from .dsl import parse_rvobject, parse_series, parse_set
from .errors import ParseError, TmotiveError, ValidationError
from .ring import quotient_reduce, specialize_b, specialize_g
from .rvobjects import blowup, isp_equiv, rv_class
from .vfsets import set_class, validate

SERIES_OPS = {
    "add": 2, "sub": 2, "mul": 2, "neg": 1, "inv": (1, 2),
    "cmp": 2, "val": 1, "rv": 1, "res": 1,
}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(f"usage: {message}")


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None


def _cmd_class(args, out):
    s = parse_set(_read_file(args.file))
    validate(s)
    g = set_class(s)
    print(g, file=out)
    print(quotient_reduce(g), file=out)


def _cmd_euler(args, out):
    s = parse_set(_read_file(args.file))
    validate(s)
    w = quotient_reduce(set_class(s))
    print(specialize_g(w) if args.which == "g" else specialize_b(w), file=out)


def _cmd_rvclass(args, out):
    print(rv_class(parse_rvobject(_read_file(args.file))), file=out)


def _cmd_blowup(args, out):
    obj = blowup(parse_rvobject(_read_file(args.file)), args.index, args.coord)
    print(obj, file=out)
    print(rv_class(obj), file=out)


def _cmd_ispcheck(args, out):
    a = parse_rvobject(_read_file(args.file1))
    b = parse_rvobject(_read_file(args.file2))
    print("equiv" if isp_equiv(a, b) else "inequiv", file=out)


def _cmd_series(args, out):
    op, operands = args.op, args.operands
    want = SERIES_OPS[op]
    counts = want if isinstance(want, tuple) else (want,)
    if len(operands) not in counts:
        raise ParseError(f"series {op} takes {' or '.join(map(str, counts))} operand(s)")
    if op == "inv":
        x = parse_series(operands[0])
        order = None
        if len(operands) > 1:
            try:
                order = hahn.as_rational(operands[1])
            except ValueError:
                raise ParseError(f"bad truncation order {operands[1]!r}") from None
        if x.is_zero():
            raise ValidationError("inverse of the zero series")
        if order is not None and order <= 0:
            raise ValidationError("truncation order must be positive")
        print(hahn.hs_inv(x, order), file=out)
        return
    xs = [parse_series(o) for o in operands]
    if op == "add":
        result = xs[0] + xs[1]
    elif op == "sub":
        result = xs[0] - xs[1]
    elif op == "mul":
        result = xs[0] * xs[1]
    elif op == "neg":
        result = -xs[0]
    elif op == "cmp":
        result = hahn.hs_cmp(xs[0], xs[1])
    elif op == "val":
        v = hahn.hs_val(xs[0])
        result = v.render_multiplicative() if args.multiplicative else v
    elif op == "rv":
        result = hahn.hs_rv(xs[0])
    else:
        result = hahn.render_rational(hahn.hs_res(xs[0]))
    print(result, file=out)


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(prog="tmotive", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    c = sub.add_parser("class", help="class of a VF set and its quotient form")
    c.add_argument("file")
    c.set_defaults(func=_cmd_class)

    e = sub.add_parser("euler", help="one of the two integer Euler characteristics")
    e.add_argument("--which", choices=("g", "b"), required=True)
    e.add_argument("file")
    e.set_defaults(func=_cmd_euler)

    r = sub.add_parser("rvclass", help="class of an RV object")
    r.add_argument("file")
    r.set_defaults(func=_cmd_rvclass)

    b = sub.add_parser("blowup", help="elementary blowup of an RV object")
    b.add_argument("file")
    b.add_argument("index", type=int)
    b.add_argument("coord", type=int)
    b.set_defaults(func=_cmd_blowup)

    i = sub.add_parser("ispcheck", help="compare two RV objects modulo blowups")
    i.add_argument("file1")
    i.add_argument("file2")
    i.set_defaults(func=_cmd_ispcheck)

    s = sub.add_parser("series", help="Hahn series arithmetic")
    s.add_argument("op", choices=sorted(SERIES_OPS))
    s.add_argument("operands", nargs="*")
    s.add_argument("--multiplicative", action="store_true",
                   help="render valuations as sign*e^(-q)")
    s.set_defaults(func=_cmd_series)
    return p


_SERIES_FLAGS = ("--multiplicative", "-h", "--help")


def _shield_operands(argv: list[str]) -> list[str]:
    """Keep series operands such as ``-2*t^3`` from being read as options."""
    if not argv or argv[0] != "series":
        return argv
    rest = argv[1:]
    flags = [a for a in rest if a in _SERIES_FLAGS]
    operands = [a for a in rest if a not in _SERIES_FLAGS and a != "--"]
    return ["series", *flags, "--", *operands]


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_shield_operands(argv))
        args.func(args, out)
    except ParseError as exc:
        print(f"tmotive: parse error: {exc}", file=err)
        return 2
    except ValidationError as exc:
        print(f"tmotive: error: {exc}", file=err)
        return 1
    except (TmotiveError, ValueError, ZeroDivisionError) as exc:
        print(f"tmotive: error: {exc}", file=err)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
