import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from tmotive.dsl import (
    SourceSpan, parse, parse_graded_text, parse_rvobject, parse_series, parse_series_text,
    parse_set, parse_wform_text, read, render,
)
from tmotive.errors import InvalidBlowupCoordinate, ParseError
from tmotive.gamma import GammaSet
from tmotive.hahn import ZERO, HahnSeries
from tmotive.res import ResCellList, ResGradedClass
from tmotive.ring import WForm, quotient_reduce
from tmotive.rvobjects import RvObject, point_box, rv_class
from tmotive.vfsets import OPEN, Disc, DiscPiece, Point, Product, RvPull, VfSet

from .gen import rand_graded, rand_piece, rand_rvobject, rand_series, rand_wform, series


class TestParse:
    def test_point(self):
        assert parse("(point 0)") == Point(ZERO)

    def test_open_disc(self):
        assert parse("(odisc (series (term 1 2)) 3/2)") == DiscPiece(
            Disc(HahnSeries.monomial(2, 1), F(3, 2), OPEN)
        )

    def test_rationals_normalized(self):
        assert parse("(odisc (series (term 2/4 6/3)) 4/6)") == DiscPiece(
            Disc(HahnSeries.monomial(2, F(1, 2)), F(2, 3), OPEN)
        )

    def test_repeated_terms_sum(self):
        assert parse("(series (term 1 2) (term 1 -2) (term 0 1))") == HahnSeries.constant(1)

    def test_comments_and_whitespace(self):
        assert parse("; a point\n(point\n  ; the origin\n  0)") == Point(ZERO)

    def test_set_forms(self):
        s = parse_set("(union (prod (point 0) (odisc 1 0)) (prod (point 1) (point 0)))")
        assert len(s.terms) == 2 and s.dim == 2
        assert parse_set("(point 0)") == VfSet.of(Point(ZERO))

    def test_rvpull(self):
        p = parse("(rvpull (res 1 (cells 1)) (gset (gcell ray)) 0)")
        assert p == RvPull(ResCellList(1, (1,)), GammaSet.of(("ray",)), ZERO)

    def test_empty_gset_with_grade(self):
        assert parse("(gset 2)") == GammaSet((), 2)
        assert parse("(gset)") == GammaSet((), 0)

    def test_resclass(self):
        assert parse("(resclass 1 1 -1)") == ResGradedClass(1, 1, -1)

    def test_blowup_form(self):
        o = parse_rvobject("(blowup (rvobj (box (res 1 (cells 0)) (gset (gcell)) 1)) 0 0)")
        assert len(o.boxes) == 2
        assert quotient_reduce(rv_class(o)) == quotient_reduce(rv_class(RvObject((point_box(),))))
        with pytest.raises(InvalidBlowupCoordinate):
            parse_rvobject("(blowup (rvobj (box (res 1 (cells 1)) (gset (gcell)) 1)) 0 0)")


class TestErrors:
    def test_unbalanced(self):
        with pytest.raises(ParseError) as info:
            parse("(odisc")
        assert "end of input" in str(info.value)
        assert info.value.span == SourceSpan(6, 6, 1, 7)

    def test_stray_paren(self):
        with pytest.raises(ParseError, match="unexpected '\\)'"):
            read("(point 0))")

    def test_two_forms(self):
        with pytest.raises(ParseError) as info:
            read("(point 0)\n(point 1)")
        assert info.value.span.line == 2 and info.value.span.column == 1

    def test_empty(self):
        with pytest.raises(ParseError, match="empty input"):
            read("  ; nothing\n")

    @pytest.mark.parametrize("text", [
        "(odisc 0)",
        "(odisc 0 x)",
        "(point 1/0)",
        "(cells 1)",
        "(halfthin 0 1 *)",
        "(vint (lo 0 true) (hi +inf false))",
        "(vint (lo -inf maybe) (hi +inf false))",
        "(res 1 (cells 2))",
        "(gcell pt segment)",
        "(gset (gcell pt) (gcell pt pt))",
        "(box (res 2 (cells 1)) (gset (gcell)) 1)",
        "(resclass 1 2 0)",
        "(series (term 1 0.5))",
    ])
    def test_rejected(self, text):
        with pytest.raises(ParseError):
            parse(text)

    def test_byte_offsets(self):
        # the non-ASCII comment is two bytes per character
        with pytest.raises(ParseError) as info:
            read("; éé\n)")
        span = info.value.span
        assert (span.start, span.end, span.line, span.column) == (7, 8, 2, 1)


class TestTextForms:
    def test_series(self):
        assert parse_series_text("3*t^(1/2) + -1*t^2") == HahnSeries.from_terms(
            [(F(1, 2), 3), (2, -1)]
        )
        assert parse_series_text("0") == ZERO
        assert parse_series("-2*t^3 + 1*t^4") == parse_series("(series (term 3 -2) (term 4 1))")
        assert parse_series("5/2") == HahnSeries.constant(F(5, 2))

    def test_series_shorthand(self):
        t = HahnSeries.monomial(1, 1)
        assert parse_series_text("-t") == -t
        assert parse_series_text("1 - t") == 1 - t
        assert parse_series_text("t^2 - -3*t") == t * t + 3 * t
        assert parse_series_text("-1/2*t^(-3/2)") == HahnSeries.monomial(F(-1, 2), F(-3, 2))

    def test_graded_and_wform(self):
        g = parse_graded_text("1 + (0 + 2*Y)*X")
        assert quotient_reduce(g) == WForm(1, 2)
        assert parse_wform_text("1 + -2*w") == WForm(1, -2)

    def test_bad_text(self):
        for bad in ("3*t^", "t^2 +", "1 + 2*q"):
            with pytest.raises(ParseError):
                parse_series_text(bad)


@given(series())
def test_series_round_trip(x):
    assert parse_series_text(str(x)) == x
    sexpr = "(series" + "".join(f" (term {e} {c})" for e, c in x.terms) + ")"
    assert parse(sexpr) == x


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_piece_round_trip(seed):
    rng = random.Random(seed)
    p = rand_piece(rng)
    assert parse(render(p)) == p
    s = VfSet((Product((p, rand_piece(rng))), Product((rand_piece(rng), p))))
    assert parse(render(s)) == s


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_object_and_class_round_trip(seed):
    rng = random.Random(seed)
    o = rand_rvobject(rng)
    assert parse(render(o)) == o
    g = rand_graded(rng)
    assert parse_graded_text(str(g)) == g
    w = rand_wform(rng)
    assert parse_wform_text(str(w)) == w
    x = rand_series(rng)
    assert parse_series(str(x)) == x
