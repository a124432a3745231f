"""Objects of RV[*] built from tamped boxes, and elementary blowups.

A box is ``U x I^# x {1}^u``: a residue part ``U`` (open-cell data in
powers of ``K^+``), a value-group part ``I`` pulled back to RV, and ``u``
unit coordinates fixed at 1.  The finite-to-one map of the object is
only tracked through its arity; the unit coordinates account for the
difference between the arity and the dimension of ``U x I^#``.

Coordinates of a box are numbered from 0: first the residue
coordinates, then the value-group coordinates, then the unit ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidBlowupCoordinate, ValidationError
from .gamma import RAY, GammaCell, GammaSet, UNIT as GAMMA_UNIT, gamma_class
from .res import ResCellList, ResGradedClass, res_class_of_cells, res_embed
from .ring import ZERO, GradedYX, X, quotient_reduce

RAY_PAIR = GammaSet((GammaCell((RAY,)), GammaCell((RAY,))))


def assemble(r: ResGradedClass, g: GammaSet) -> GradedYX:
    """Class of the tamped set ``U x I^#`` from the classes of its factors."""
    return res_embed(r) * gamma_class(g)


@dataclass(frozen=True)
class RvBox:
    res: ResCellList
    gamma: GammaSet = GAMMA_UNIT
    arity: int = 0

    def __post_init__(self):
        if self.units < 0:
            raise ValidationError(
                f"box arity {self.arity} is below its dimension "
                f"{self.res.grade + self.gamma.grade}"
            )

    @property
    def units(self) -> int:
        return self.arity - self.res.grade - self.gamma.grade

    def klass(self) -> GradedYX:
        return assemble(res_class_of_cells(self.res), self.gamma) * (-X) ** self.units

    def blowup_coordinates(self) -> list[int]:
        """Coordinates at which an elementary blowup is admitted."""
        coords = list(range(self.res.grade + self.gamma.grade, self.arity))
        if self.res.grade > 0 and self.res.is_single_point():
            coords = list(range(self.res.grade)) + coords
        return coords

    def __str__(self):
        return f"(box {self.res} {self.gamma} {self.arity})"


@dataclass(frozen=True)
class RvObject:
    boxes: tuple[RvBox, ...] = ()

    def __add__(self, other: "RvObject") -> "RvObject":
        return RvObject(self.boxes + other.boxes)

    def __str__(self):
        return "(rvobj" + "".join(" " + str(b) for b in self.boxes) + ")"


def unit_box() -> RvBox:
    """``1_K``: a single point in grade 0."""
    return RvBox(ResCellList(0, (0,)), GAMMA_UNIT, 0)


def point_box() -> RvBox:
    """``[1] = ({1}, id)`` in grade 1."""
    return RvBox(ResCellList(1, (0,)), GAMMA_UNIT, 1)


def rv_circ_box() -> RvBox:
    """``(RV^oo, id)``: the pullback of the two open rays."""
    return RvBox(ResCellList(0, (0,)), RAY_PAIR, 1)


def rv_class(o: RvObject) -> GradedYX:
    acc = ZERO
    for b in o.boxes:
        acc = acc + b.klass()
    return acc


def blowup(o: RvObject, box_index: int, coord: int) -> RvObject:
    """Elementary blowup of one box at a unit (or point) coordinate.

    The coordinate ``s`` ranges over ``RV^oo_0``: ``s = 0`` drops the
    coordinate and lowers the grade, the rest multiplies the box by the
    pair of open rays.
    """
    if not 0 <= box_index < len(o.boxes):
        raise InvalidBlowupCoordinate(f"no box with index {box_index}")
    box = o.boxes[box_index]
    if coord not in box.blowup_coordinates():
        raise InvalidBlowupCoordinate(
            f"coordinate {coord} of box {box_index} is not a unit coordinate"
        )
    res = box.res
    if coord < res.grade:
        res = ResCellList(res.grade - 1, (0,))
    dropped = RvBox(res, box.gamma, box.arity - 1)
    rays = RvBox(res, box.gamma.product(RAY_PAIR), box.arity)
    boxes = o.boxes[:box_index] + (dropped, rays) + o.boxes[box_index + 1:]
    return RvObject(boxes)


def isp_equiv(o1: RvObject, o2: RvObject) -> bool:
    """Equality modulo the ideal generated by ``1 + 2YX + X``."""
    return quotient_reduce(rv_class(o1) - rv_class(o2)).is_zero()
