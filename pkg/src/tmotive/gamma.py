"""Cells in the signed value group and their classes.

A cell is a product of one-dimensional pieces of three combinatorial
kinds: a point, a bounded open interval, or an open ray.  Endpoints do
not matter for the class, so cells carry no coordinates.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .ring import ONE, X, YX, ZERO, GradedYX, retract_b, retract_g, eval_poly

PT, BOPEN, RAY = "pt", "bopen", "ray"
KINDS = (PT, BOPEN, RAY)

_ENTRY_CLASS = {PT: X, BOPEN: -X, RAY: YX}


@dataclass(frozen=True)
class GammaCell:
    entries: tuple[str, ...] = ()

    def __post_init__(self):
        entries = tuple(self.entries)
        for e in entries:
            if e not in KINDS:
                raise ValueError(f"unknown gamma cell entry {e!r}")
        object.__setattr__(self, "entries", entries)

    @property
    def grade(self) -> int:
        return len(self.entries)

    def __mul__(self, other: "GammaCell") -> "GammaCell":
        return GammaCell(self.entries + other.entries)

    def klass(self) -> GradedYX:
        acc = ONE
        for e in self.entries:
            acc = acc * _ENTRY_CLASS[e]
        return acc

    def __str__(self):
        return "(gcell" + "".join(" " + e for e in self.entries) + ")"


@dataclass(frozen=True)
class GammaSet:
    """Disjoint union of cells of a common grade.

    Cells are kept sorted so that equal multisets compare equal.  An
    empty set still needs a grade, hence the explicit field.
    """

    cells: tuple[GammaCell, ...] = ()
    grade: int | None = None

    def __post_init__(self):
        cells = tuple(sorted(self.cells, key=lambda c: c.entries))
        grades = {c.grade for c in cells}
        if len(grades) > 1:
            raise ValueError(f"gamma set mixes grades {sorted(grades)}")
        grade = self.grade
        if grades:
            (g,) = grades
            if grade is not None and grade != g:
                raise ValueError(f"declared grade {grade} but cells have grade {g}")
            grade = g
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "grade", 0 if grade is None else grade)

    @classmethod
    def of(cls, *cells: Iterable[str]) -> "GammaSet":
        return cls(tuple(GammaCell(tuple(c)) for c in cells))

    def union(self, other: "GammaSet") -> "GammaSet":
        if self.cells and other.cells and self.grade != other.grade:
            raise ValueError("union of gamma sets of different grades")
        grade = self.grade if self.cells else other.grade
        return GammaSet(self.cells + other.cells, grade)

    def product(self, other: "GammaSet") -> "GammaSet":
        return GammaSet(
            tuple(a * b for a in self.cells for b in other.cells),
            self.grade + other.grade,
        )

    def multiset(self) -> Counter:
        return Counter(c.entries for c in self.cells)

    def __str__(self):
        if not self.cells:
            return f"(gset {self.grade})"
        return "(gset" + "".join(" " + str(c) for c in self.cells) + ")"


UNIT = GammaSet((GammaCell(),))


def gamma_class(s: GammaSet) -> GradedYX:
    """Sum over cells of the product of entry classes.

    A point is ``X``, a ray ``YX`` and a bounded open interval ``-X``; the
    last value comes from ``[0, g) = {0} + (0, g)`` together with
    ``[0, g)`` being in bijection with ``[g, 2g)``, so the half-open
    interval has class zero.
    """
    acc = ZERO
    for c in s.cells:
        acc = acc + c.klass()
    return acc


def chi_gamma_g(s: GammaSet) -> int:
    return eval_poly(retract_g(gamma_class(s)), 1)


def chi_gamma_b(s: GammaSet) -> int:
    return eval_poly(retract_b(gamma_class(s)), 1)
