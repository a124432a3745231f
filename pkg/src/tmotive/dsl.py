"""S-expression surface language for series, pieces, sets and RV objects.

``parse`` turns text into the library's own (frozen, structurally
comparable) values; ``render`` is ``str`` on those values and produces
the canonical form, which parses back to an equal value.

Grammar, informally::

    S      := RATIONAL | (series (term EXP COEFF) ...)
    PIECE  := (point S) | (odisc S R) | (cdisc S R) | (halfthin S R +|-)
            | (vint (lo END BOOL) (hi END BOOL)) | (rvpull RES GSET S)
    END    := -inf | +inf | (point S) | (odisc S R) | (cdisc S R)
    SET    := PIECE | (prod PIECE ...) | (union TERM ...)
    RES    := (res K (cells D ...))        GSET := (gset [K] (gcell E ...) ...)
    OBJ    := (rvobj (box RES GSET ARITY) ...) | (blowup OBJ BOX COORD)

Besides s-expressions the module parses the canonical text renderings
of series (``3*t^(1/2) + -1*t^2``), graded classes and quotient forms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, ValidationError
from .gamma import KINDS, GammaCell, GammaSet
from .hahn import HahnSeries
from .res import ResCellList, ResGradedClass
from .ring import GradedYX, WForm
from .rvobjects import RvBox, RvObject, blowup
from .vfsets import (
    CLOSED, NEG_INF, OPEN, POS_INF, Disc, DiscPiece, Endpoint, HalfThin, Point,
    Product, RvPull, VfSet, VInterval,
)


@dataclass(frozen=True)
class SourceSpan:
    start: int   # byte offset
    end: int
    line: int
    column: int


@dataclass(frozen=True)
class Atom:
    text: str
    span: SourceSpan


@dataclass(frozen=True)
class SList:
    items: tuple
    span: SourceSpan

    @property
    def head(self) -> str | None:
        if self.items and isinstance(self.items[0], Atom):
            return self.items[0].text
        return None


@dataclass(frozen=True)
class BlowupForm:
    """``(blowup OBJ BOX COORD)``; ``evaluate`` performs the blowup."""

    obj: "RvObject | BlowupForm"
    box: int
    coord: int

    def evaluate(self) -> RvObject:
        base = self.obj.evaluate() if isinstance(self.obj, BlowupForm) else self.obj
        return blowup(base, self.box, self.coord)

    def __str__(self):
        return f"(blowup {self.obj} {self.box} {self.coord})"


# -- reader -------------------------------------------------------------------

_TOKEN = re.compile(r"\s+|;[^\n]*|\(|\)|[^\s();]+")


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.line_starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def span(self, start: int, end: int) -> SourceSpan:
        line = 0
        lo, hi = 0, len(self.line_starts) - 1
        while lo <= hi:
            mid = (lo + hi) // 2
            if self.line_starts[mid] <= start:
                line, lo = mid, mid + 1
            else:
                hi = mid - 1
        col = start - self.line_starts[line]
        b0 = len(self.text[:start].encode("utf-8"))
        b1 = b0 + len(self.text[start:end].encode("utf-8"))
        return SourceSpan(b0, b1, line + 1, col + 1)

    def read_all(self) -> list:
        stack: list[tuple[int, list]] = []
        top: list = []
        for m in _TOKEN.finditer(self.text):
            tok = m.group()
            if tok[0].isspace() or tok[0] == ";":
                continue
            if tok == "(":
                stack.append((m.start(), top))
                top = []
            elif tok == ")":
                if not stack:
                    raise ParseError("unexpected ')'", self.span(m.start(), m.end()))
                start, parent = stack.pop()
                parent.append(SList(tuple(top), self.span(start, m.end())))
                top = parent
            else:
                top.append(Atom(tok, self.span(m.start(), m.end())))
        if stack:
            end = len(self.text)
            raise ParseError("unexpected end of input, expected ')'", self.span(end, end))
        return top


def read(text: str):
    """Read exactly one s-expression."""
    forms = _Reader(text).read_all()
    if not forms:
        raise ParseError("empty input", SourceSpan(0, 0, 1, 1))
    if len(forms) > 1:
        raise ParseError("expected a single top-level form", forms[1].span)
    return forms[0]


# -- form parsers ---------------------------------------------------------------

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def _rational(node) -> Fraction:
    if isinstance(node, Atom) and _RATIONAL.match(node.text):
        num, _, den = node.text.partition("/")
        if den and int(den) == 0:
            raise ParseError("zero denominator", node.span)
        return Fraction(int(num), int(den) if den else 1)
    raise ParseError("expected a rational literal", node.span)


def _integer(node) -> int:
    q = _rational(node)
    if q.denominator != 1:
        raise ParseError("expected an integer", node.span)
    return q.numerator


def _natural(node) -> int:
    n = _integer(node)
    if n < 0:
        raise ParseError("expected a nonnegative integer", node.span)
    return n


def _list(node, head: str | None = None, arity: int | None = None) -> SList:
    if not isinstance(node, SList):
        raise ParseError(f"expected ({head} ...)" if head else "expected a list", node.span)
    if head is not None and node.head != head:
        raise ParseError(f"expected ({head} ...)", node.span)
    if arity is not None and len(node.items) - 1 != arity:
        raise ParseError(f"({node.head} ...) takes {arity} argument(s)", node.span)
    return node


def _series(node) -> HahnSeries:
    if isinstance(node, Atom):
        return HahnSeries.constant(_rational(node))
    lst = _list(node, "series")
    pairs = []
    for item in lst.items[1:]:
        term = _list(item, "term", 2)
        pairs.append((_rational(term.items[1]), _rational(term.items[2])))
    return HahnSeries.from_terms(pairs)


def _disc(lst: SList) -> Disc:
    _list(lst, lst.head, 2)
    kind = OPEN if lst.head == "odisc" else CLOSED
    return Disc(_series(lst.items[1]), _rational(lst.items[2]), kind)


_BOOL = {"true": True, "incl": True, "false": False, "excl": False}


def _endpoint(node, tag: str) -> Endpoint:
    lst = _list(node, tag, 2)
    end, flag = lst.items[1], lst.items[2]
    if not isinstance(flag, Atom) or flag.text not in _BOOL:
        raise ParseError("expected true or false", flag.span)
    incl = _BOOL[flag.text]
    if isinstance(end, Atom):
        if end.text == "-inf":
            return NEG_INF
        if end.text == "+inf":
            return POS_INF
        raise ParseError("expected -inf, +inf, (point ...) or a disc", end.span)
    if end.head == "point":
        _list(end, "point", 1)
        return Endpoint("point", _series(end.items[1]), incl)
    if end.head in ("odisc", "cdisc"):
        return Endpoint("disc", _disc(end), incl)
    raise ParseError("expected -inf, +inf, (point ...) or a disc", end.span)


def _res(node) -> ResCellList:
    lst = _list(node, "res", 2)
    cells = _list(lst.items[2], "cells")
    grade = _natural(lst.items[1])
    dims = [_natural(c) for c in cells.items[1:]]
    for d, c in zip(dims, cells.items[1:]):
        if d > grade:
            raise ParseError(f"cell dimension {d} exceeds grade {grade}", c.span)
    return ResCellList(grade, tuple(dims))


def _gcell(node) -> GammaCell:
    lst = _list(node, "gcell")
    entries = []
    for e in lst.items[1:]:
        if not isinstance(e, Atom) or e.text not in KINDS:
            raise ParseError("expected pt, bopen or ray", e.span)
        entries.append(e.text)
    return GammaCell(tuple(entries))


def _gset(node) -> GammaSet:
    lst = _list(node, "gset")
    items = list(lst.items[1:])
    grade = None
    if items and isinstance(items[0], Atom):
        grade = _natural(items.pop(0))
    cells = tuple(_gcell(c) for c in items)
    try:
        return GammaSet(cells, grade)
    except ValueError as exc:
        raise ParseError(str(exc), lst.span) from None


def _piece(node):
    lst = _list(node)
    head = lst.head
    if head == "point":
        _list(lst, "point", 1)
        return Point(_series(lst.items[1]))
    if head in ("odisc", "cdisc"):
        return DiscPiece(_disc(lst))
    if head == "halfthin":
        _list(lst, "halfthin", 3)
        side = lst.items[3]
        if not isinstance(side, Atom) or side.text not in ("+", "-"):
            raise ParseError("expected + or -", side.span)
        return HalfThin(_series(lst.items[1]), _rational(lst.items[2]),
                        1 if side.text == "+" else -1)
    if head == "vint":
        _list(lst, "vint", 2)
        return VInterval(_endpoint(lst.items[1], "lo"), _endpoint(lst.items[2], "hi"))
    if head == "rvpull":
        _list(lst, "rvpull", 3)
        return RvPull(_res(lst.items[1]), _gset(lst.items[2]), _series(lst.items[3]))
    raise ParseError("expected a piece form", lst.span)


def _product(node) -> Product:
    lst = _list(node)
    if lst.head == "prod":
        return Product(tuple(_piece(p) for p in lst.items[1:]))
    return Product((_piece(lst),))


def _vfset(node) -> VfSet:
    lst = _list(node)
    if lst.head == "union":
        return VfSet(tuple(_product(t) for t in lst.items[1:]))
    return VfSet((_product(lst),))


def _box(node) -> RvBox:
    lst = _list(node, "box", 3)
    try:
        return RvBox(_res(lst.items[1]), _gset(lst.items[2]), _natural(lst.items[3]))
    except ValidationError as exc:
        raise ParseError(str(exc), lst.span) from None


def _rvobj(node):
    lst = _list(node)
    if lst.head == "rvobj":
        return RvObject(tuple(_box(b) for b in lst.items[1:]))
    if lst.head == "blowup":
        _list(lst, "blowup", 3)
        return BlowupForm(_rvobj(lst.items[1]), _natural(lst.items[2]), _natural(lst.items[3]))
    raise ParseError("expected (rvobj ...) or (blowup ...)", lst.span)


def _any(node):
    if isinstance(node, Atom):
        return _series(node)
    head = node.head
    if head == "series":
        return _series(node)
    if head in ("prod", "union"):
        return _vfset(node)
    if head in ("point", "odisc", "cdisc", "halfthin", "vint", "rvpull"):
        return _piece(node)
    if head == "gcell":
        return _gcell(node)
    if head == "gset":
        return _gset(node)
    if head == "res":
        return _res(node)
    if head == "resclass":
        lst = _list(node, "resclass", 3)
        try:
            return ResGradedClass(_natural(lst.items[1]), _natural(lst.items[2]),
                                  _integer(lst.items[3]))
        except ValueError as exc:
            raise ParseError(str(exc), lst.span) from None
    if head in ("rvobj", "blowup"):
        return _rvobj(node)
    if head == "box":
        return _box(node)
    raise ParseError(f"unknown form {head!r}", node.span)


def parse(text: str):
    """Parse one form into the corresponding library value."""
    return _any(read(text))


def parse_set(text: str) -> VfSet:
    """Parse a piece, product or union as a ``VfSet``."""
    return _vfset(_list(read(text)))


def parse_rvobject(text: str) -> RvObject:
    obj = _rvobj(read(text))
    return obj.evaluate() if isinstance(obj, BlowupForm) else obj


def parse_series(text: str) -> HahnSeries:
    """A series given either as an s-expression or in canonical text form."""
    if text.lstrip().startswith("("):
        return _series(read(text))
    return parse_series_text(text)


def render(value) -> str:
    return str(value)


# -- canonical text forms ---------------------------------------------------------

_TEXT_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z])|([-+*^()]))")


class _TextParser:
    def __init__(self, text: str, what: str):
        self.text = text
        self.what = what
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            m = _TEXT_TOKEN.match(stripped, pos)
            if not m:
                self.fail(f"unexpected character {stripped[pos]!r}", pos)
            kind = "num" if m.group(1) else "name" if m.group(2) else "sym"
            self.tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
            pos = m.end()
        self.i = 0

    def fail(self, msg, pos=None):
        if pos is None:
            pos = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        raise ParseError(f"{self.what}: {msg}", SourceSpan(pos, pos, 1, pos + 1))

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, None)

    def take(self, kind=None, value=None):
        k, v, _ = self.peek()
        if k is None or (kind and k != kind) or (value and v != value):
            self.fail(f"expected {value or kind}")
        self.i += 1
        return v

    def accept(self, value):
        if self.peek()[1] == value:
            self.i += 1
            return True
        return False

    def done(self):
        if self.i != len(self.tokens):
            self.fail("trailing input")

    def number(self) -> Fraction:
        sign = -1 if self.accept("-") else 1
        return sign * self.unsigned()

    def unsigned(self) -> Fraction:
        text = self.take("num")
        num, _, den = text.partition("/")
        if den and int(den) == 0:
            self.fail("zero denominator")
        return Fraction(int(num), int(den) if den else 1)

    def integer(self) -> int:
        q = self.number()
        if q.denominator != 1:
            self.fail("expected an integer")
        return q.numerator


def parse_series_text(text: str) -> HahnSeries:
    """Parse ``c*t^e + ...``.

    A bare rational is a constant and ``0`` the zero series.  Terms may
    also be written ``t``, ``t^e`` or ``c*t``, and joined by ``-``.
    """
    p = _TextParser(text, "series")
    pairs = []
    sign = 1
    while True:
        if p.accept("-"):
            sign = -sign
        if p.peek()[1] == "t":
            coeff = Fraction(1)
            has_t = True
        else:
            coeff = p.unsigned()
            has_t = p.accept("*")
        exp = Fraction(0)
        if has_t:
            p.take("name", "t")
            exp = Fraction(1)
            if p.accept("^"):
                if p.accept("("):
                    exp = p.number()
                    p.take("sym", ")")
                else:
                    exp = p.number()
        pairs.append((exp, sign * coeff))
        if p.accept("+"):
            sign = 1
        elif p.accept("-"):
            sign = -1
        else:
            break
    p.done()
    return HahnSeries.from_terms(pairs)


def parse_graded_text(text: str) -> GradedYX:
    """Parse ``m0 + (m1 + n1*Y)*X + (m2 + n2*Y)*X^2 + ...``."""
    p = _TextParser(text, "graded class")
    parts: dict[int, tuple[int, int]] = {}

    def add(deg, m, n):
        a, b = parts.get(deg, (0, 0))
        parts[deg] = (a + m, b + n)

    while True:
        if p.accept("("):
            m = p.integer()
            p.take("sym", "+")
            n = p.integer()
            p.take("sym", "*")
            p.take("name", "Y")
            p.take("sym", ")")
            p.take("sym", "*")
            p.take("name", "X")
            deg = p.integer() if p.accept("^") else 1
            if deg < 1:
                p.fail("degree must be positive")
            add(deg, m, n)
        else:
            add(0, p.integer(), 0)
        if not p.accept("+"):
            break
    p.done()
    return GradedYX.from_dict(parts)


def parse_wform_text(text: str) -> WForm:
    """Parse ``a + b*w``."""
    p = _TextParser(text, "quotient form")
    a = p.integer()
    p.take("sym", "+")
    b = p.integer()
    p.take("sym", "*")
    p.take("name", "w")
    p.done()
    return WForm(a, b)
