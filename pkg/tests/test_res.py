import pytest
from hypothesis import given, strategies as st

from tmotive.errors import GradeMismatch
from tmotive.res import (
    ONE_K, POINT, TORUS, ResCellList, ResClass, ResGradedClass, res_add,
    res_class_of_cells, res_embed, res_graded_add, res_graded_mul, res_mul,
)
from tmotive.ring import ONE, X


@st.composite
def res_classes(draw):
    dim = draw(st.integers(0, 4))
    chi = draw(st.integers(0 if dim == 0 else -6, 6))
    return ResClass(dim, chi)


@st.composite
def graded_classes(draw, grade=None):
    k = draw(st.integers(0, 3)) if grade is None else grade
    return ResGradedClass(k, draw(st.integers(0, k)), draw(st.integers(0 if k == 0 else -6, 6)))


@st.composite
def cell_lists(draw, grade=None):
    k = draw(st.integers(0, 3)) if grade is None else grade
    return ResCellList(k, tuple(draw(st.lists(st.integers(0, k), max_size=5))))


class TestExamples:
    def test_add(self):
        assert res_add(ResClass(2, 3), ResClass(1, 5)) == ResClass(2, 8)
        assert res_add(ResClass(0, 0), ResClass(3, -2)) == ResClass(3, -2)
        assert res_add(ResClass(1, -1), ResClass(1, 1)) == ResClass(1, 0)

    def test_mul(self):
        assert res_mul(ResClass(1, -1), ResClass(1, -1)) == ResClass(2, 1)
        assert res_mul(ResClass(0, 1), ResClass(3, -2)) == ResClass(3, -2)
        assert res_mul(ResClass(2, 0), ResClass(3, 5)) == ResClass(5, 0)

    def test_product_with_zero_as_printed(self):
        # the printed product adds dimensions even for the empty class
        assert res_mul(ResClass(0, 0), ResClass(2, 3)) == ResClass(2, 0)

    def test_graded(self):
        assert res_graded_add(ResGradedClass(1, 1, -2), POINT) == ResGradedClass(1, 1, -1)
        assert res_graded_mul(TORUS, TORUS) == ResGradedClass(2, 2, 1)
        x = ResGradedClass(2, 1, -3)
        assert res_graded_mul(ONE_K, x) == x

    def test_grade_mismatch(self):
        with pytest.raises(GradeMismatch):
            res_graded_add(ONE_K, POINT)

    def test_cells(self):
        assert res_class_of_cells(ResCellList(1, (1,))) == TORUS
        assert res_class_of_cells(ResCellList(1, (0,))) == POINT
        assert res_class_of_cells(ResCellList(2, (0, 1, 1, 2))) == ResGradedClass(2, 2, 0)
        assert str(ResCellList(2, (1, 0))) == "(res 2 (cells 0 1))"

    def test_embed(self):
        assert res_embed(POINT) == -X
        assert res_embed(TORUS) == X
        assert res_embed(ONE_K) == ONE

    def test_invalid(self):
        with pytest.raises(ValueError):
            ResClass(0, -1)
        with pytest.raises(ValueError):
            ResGradedClass(1, 2, 0)
        with pytest.raises(ValueError):
            ResCellList(1, (2,))


@given(res_classes(), res_classes(), res_classes())
def test_semiring_laws(a, b, c):
    assert res_add(a, b) == res_add(b, a)
    assert res_mul(a, b) == res_mul(b, a)
    assert res_add(res_add(a, b), c) == res_add(a, res_add(b, c))
    assert res_mul(res_mul(a, b), c) == res_mul(a, res_mul(b, c))
    assert res_mul(a, res_add(b, c)) == res_add(res_mul(a, b), res_mul(a, c))
    assert res_add(a, ResClass(0, 0)) == a
    assert res_mul(a, ResClass(0, 1)) == a


@given(st.integers(0, 3).flatmap(lambda k: st.tuples(
    graded_classes(k), graded_classes(k), graded_classes(k))))
def test_graded_semiring_laws(abc):
    a, b, c = abc
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(graded_classes(), graded_classes())
def test_embed_multiplicative(a, b):
    assert res_embed(a * b) == res_embed(a) * res_embed(b)


@given(st.integers(0, 3).flatmap(lambda k: st.tuples(graded_classes(k), graded_classes(k))))
def test_embed_additive(ab):
    a, b = ab
    assert res_embed(a + b) == res_embed(a) + res_embed(b)


@given(st.integers(0, 3).flatmap(lambda k: st.tuples(cell_lists(k), cell_lists(k))))
def test_cells_additive(ab):
    a, b = ab
    assert res_class_of_cells(a.union(b)) == (
        res_class_of_cells(a) + res_class_of_cells(b)
    )


@given(st.integers(0, 3).flatmap(lambda k: st.tuples(cell_lists(k), cell_lists(k))))
def test_soundness(ab):
    a, b = ab
    key = lambda c: (c.grade, max(c.cells, default=0), sum((-1) ** d for d in c.cells))
    if key(a) == key(b):
        assert res_class_of_cells(a) == res_class_of_cells(b)
        assert res_embed(res_class_of_cells(a)) == res_embed(res_class_of_cells(b))
