import random

import pytest
from hypothesis import given, settings, strategies as st

from tmotive.errors import InvalidBlowupCoordinate, ValidationError
from tmotive.gamma import PT, RAY, GammaSet
from tmotive.res import ONE_K, POINT, ResCellList
from tmotive.ring import ONE, X, YX, ZERO, WForm, generator, quotient_reduce, specialize_g
from tmotive.rvobjects import (
    RvBox, RvObject, assemble, blowup, isp_equiv, point_box, rv_circ_box, rv_class, unit_box,
)

from .gen import rand_rvobject


def obj(*boxes):
    return RvObject(tuple(boxes))


class TestExamples:
    def test_classes(self):
        assert rv_class(obj(point_box())) == -X
        assert rv_class(obj(rv_circ_box())) == 2 * YX
        assert rv_class(obj()) == ZERO

    def test_assemble(self):
        assert assemble(ONE_K, GammaSet.of((RAY,), (RAY,))) == 2 * YX
        assert assemble(POINT, GammaSet.of(())) == -X
        assert assemble(ONE_K, GammaSet.of((PT,))) == X

    def test_blowup_of_point(self):
        b = blowup(obj(point_box()), 0, 0)
        assert rv_class(b) == ONE + 2 * YX
        diff = rv_class(b) - rv_class(obj(point_box()))
        assert diff == generator()
        assert quotient_reduce(diff).is_zero()

    def test_blowup_grade_two(self):
        # (box [T] x {1}) has class X * (-X); blowing up the unit coordinate
        # turns the factor -X into 1 + 2YX
        box = RvBox(ResCellList(1, (1,)), GammaSet.of(()), 2)
        c = X
        assert rv_class(obj(box)) == c * -X
        assert rv_class(blowup(obj(box), 0, 1)) == c * (ONE + 2 * YX)

    def test_isp(self):
        o = obj(point_box())
        assert isp_equiv(o, obj(unit_box(), rv_circ_box()))
        assert isp_equiv(o, o)
        assert not isp_equiv(o, obj(unit_box()))

    def test_invalid_blowups(self):
        torus = RvBox(ResCellList(1, (1,)), GammaSet.of(()), 1)
        with pytest.raises(InvalidBlowupCoordinate):
            blowup(obj(torus), 0, 0)
        with pytest.raises(InvalidBlowupCoordinate):
            blowup(obj(point_box()), 1, 0)
        with pytest.raises(InvalidBlowupCoordinate):
            blowup(obj(rv_circ_box()), 0, 0)

    def test_arity_below_dimension(self):
        with pytest.raises(ValidationError):
            RvBox(ResCellList(2, (1,)), GammaSet.of(()), 1)

    def test_rendering(self):
        assert str(obj(point_box())) == "(rvobj (box (res 1 (cells 0)) (gset (gcell)) 1))"


def _random_blowup(rng, o):
    choices = [(i, j) for i, b in enumerate(o.boxes) for j in b.blowup_coordinates()]
    if not choices:
        return None
    return blowup(o, *rng.choice(choices))


@settings(max_examples=150)
@given(st.integers(0, 2**32 - 1))
def test_blowup_invariance(seed):
    rng = random.Random(seed)
    o = rand_rvobject(rng)
    b = _random_blowup(rng, o)
    if b is not None:
        assert isp_equiv(o, b)
        assert len(b.boxes) == len(o.boxes) + 1


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1), st.integers(1, 4))
def test_iterated_blowups(seed, n):
    rng = random.Random(seed)
    o = cur = rand_rvobject(rng)
    for _ in range(n):
        nxt = _random_blowup(rng, cur)
        if nxt is None:
            break
        cur = nxt
        assert isp_equiv(o, cur)


@given(st.integers(0, 2**32 - 1))
def test_class_additive_and_multiplicative(seed):
    rng = random.Random(seed)
    a, b = rand_rvobject(rng), rand_rvobject(rng)
    assert rv_class(a + b) == rv_class(a) + rv_class(b)
    # concatenating two boxes multiplies their classes
    x, y = a.boxes[0], b.boxes[0]
    cat = RvBox(
        ResCellList(x.res.grade + y.res.grade,
                    tuple(d + e for d in x.res.cells for e in y.res.cells)),
        x.gamma.product(y.gamma),
        x.arity + y.arity,
    )
    assert rv_class(obj(cat)) == rv_class(obj(x)) * rv_class(obj(y))


def test_point_minus_unit():
    # -X - 1 reduces to 2w, which the g specialization sends to -2
    d = quotient_reduce(rv_class(obj(point_box())) - rv_class(obj(unit_box())))
    assert d == WForm(0, 2)
    assert specialize_g(d) == -2
