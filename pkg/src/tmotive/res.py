"""Explicit Grothendieck semirings of the residue sort.

The ungraded semiring has underlying set ``(0 x N) u (N+ x Z)`` of pairs
``(dim, chi)``; the graded piece of grade ``k`` consists of triples
``(k, i, a)`` with ``0 <= i <= k``.  Sets in powers of ``K^+`` enter as
multisets of open-cell dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GradeMismatch
from .ring import GradedYX


@dataclass(frozen=True)
class ResClass:
    dim: int
    chi: int

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")
        if self.dim == 0 and self.chi < 0:
            raise ValueError("a dimension-0 class counts points, chi must be >= 0")

    def __add__(self, other):
        return res_add(self, other)

    def __mul__(self, other):
        return res_mul(self, other)


def res_add(x: ResClass, y: ResClass) -> ResClass:
    return ResClass(max(x.dim, y.dim), x.chi + y.chi)


def res_mul(x: ResClass, y: ResClass) -> ResClass:
    # taken as printed: the product of (0, 0) with (c, d) is (c, 0), not (0, 0)
    return ResClass(x.dim + y.dim, x.chi * y.chi)


@dataclass(frozen=True)
class ResGradedClass:
    grade: int
    dim: int
    chi: int

    def __post_init__(self):
        if self.grade < 0:
            raise ValueError("grade must be nonnegative")
        if not 0 <= self.dim <= self.grade:
            raise ValueError(f"dimension {self.dim} outside [0, {self.grade}]")
        if self.grade == 0 and self.chi < 0:
            raise ValueError("grade-0 classes count points, chi must be >= 0")

    @classmethod
    def zero(cls, grade: int) -> "ResGradedClass":
        return cls(grade, 0, 0)

    def __add__(self, other):
        return res_graded_add(self, other)

    def __mul__(self, other):
        return res_graded_mul(self, other)

    def __str__(self):
        return f"(resclass {self.grade} {self.dim} {self.chi})"


def res_graded_add(x: ResGradedClass, y: ResGradedClass) -> ResGradedClass:
    if x.grade != y.grade:
        raise GradeMismatch(f"cannot add classes of grades {x.grade} and {y.grade}")
    return ResGradedClass(x.grade, max(x.dim, y.dim), x.chi + y.chi)


def res_graded_mul(x: ResGradedClass, y: ResGradedClass) -> ResGradedClass:
    return ResGradedClass(x.grade + y.grade, x.dim + y.dim, x.chi * y.chi)


ONE_K = ResGradedClass(0, 0, 1)
POINT = ResGradedClass(1, 0, 1)    # [1]
TORUS = ResGradedClass(1, 1, -1)   # [T], the class of K^+


@dataclass(frozen=True)
class ResCellList:
    """A subset of ``(K^+)^k`` given by the dimensions of its open cells."""

    grade: int
    cells: tuple[int, ...] = ()

    def __post_init__(self):
        cells = tuple(sorted(int(d) for d in self.cells))
        for d in cells:
            if not 0 <= d <= self.grade:
                raise ValueError(f"cell dimension {d} outside [0, {self.grade}]")
        object.__setattr__(self, "cells", cells)

    def union(self, other: "ResCellList") -> "ResCellList":
        if self.grade != other.grade:
            raise GradeMismatch("union of cell lists of different grades")
        return ResCellList(self.grade, self.cells + other.cells)

    def is_single_point(self) -> bool:
        return self.cells == (0,)

    def __str__(self):
        return f"(res {self.grade} (cells" + "".join(f" {d}" for d in self.cells) + "))"


def res_class_of_cells(c: ResCellList) -> ResGradedClass:
    dim = max(c.cells, default=0)
    chi = sum((-1) ** d for d in c.cells)
    return ResGradedClass(c.grade, dim, chi)


def res_embed(x: ResGradedClass) -> GradedYX:
    """``chi * (-X)^k``: the residue Euler characteristic twisted by X -> -X."""
    return GradedYX.monomial(x.grade, x.chi * (-1) ** x.grade)
