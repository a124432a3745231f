"""Definable subsets of VF^n in Holly normal form and their Euler characteristic.

One-dimensional pieces are points, open and closed discs, v-intervals
(whose ends are points, discs or infinities) and half thin annuli; an
RV-pullback piece carries an abstract residue/value-group class instead
of coordinates.  A set is a finite disjoint union of products of pieces.

The class of a concrete piece is found by shell decomposition: around a
chosen center ``c`` the line splits into ``{c}`` and the shells
``v(x - c) = g``, each a union of RV-discs ``c + rv^-1(s)``.  Membership
of such a disc is constant unless it contains another center, so whole
ranges of ``g`` contribute value-group cells, the residue torsor at a
critical ``g`` contributes open arcs, and each disc that holds another
center is handled recursively at a strictly larger radius.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Union

from .errors import EmptyInterval, NonDefinableEndpoint, OverlappingPieces, ValidationError
from .gamma import BOPEN, RAY, GammaSet
from .hahn import ZERO as HS_ZERO, HahnSeries, valuation
from .res import ResCellList, res_class_of_cells
from .ring import ONE, ZERO, GradedYX, WForm, X, YX, quotient_reduce, specialize_b, specialize_g
from .rvobjects import assemble

OPEN, CLOSED = "open", "closed"


@dataclass(frozen=True)
class Disc:
    center: HahnSeries
    radius: Fraction
    kind: str = OPEN

    def __post_init__(self):
        if self.kind not in (OPEN, CLOSED):
            raise ValueError(f"disc kind must be open or closed, not {self.kind!r}")
        object.__setattr__(self, "radius", Fraction(self.radius))

    def contains(self, x: HahnSeries) -> bool:
        d = x - self.center
        if d.is_zero():
            return True
        return d.order > self.radius if self.kind == OPEN else d.order >= self.radius

    def __str__(self):
        tag = "odisc" if self.kind == OPEN else "cdisc"
        return f"({tag} {_series_sexpr(self.center)} {_rat(self.radius)})"


@dataclass(frozen=True)
class Endpoint:
    """One end of a v-interval.

    ``kind`` is ``"point"``, ``"disc"``, ``"-inf"`` or ``"+inf"``.  For a
    disc end, ``inclusive`` means the disc itself belongs to the interval.
    """

    kind: str
    value: HahnSeries | Disc | None = None
    inclusive: bool = False

    def __post_init__(self):
        if self.kind in ("-inf", "+inf"):
            if self.value is not None:
                raise ValueError("infinite endpoints carry no value")
            object.__setattr__(self, "inclusive", False)
        elif self.kind == "point":
            if not isinstance(self.value, HahnSeries):
                raise NonDefinableEndpoint("point endpoint needs an explicit series")
        elif self.kind == "disc":
            if not isinstance(self.value, Disc) or self.value.center is None:
                raise NonDefinableEndpoint("end-disc needs explicit center data")
        else:
            raise ValueError(f"unknown endpoint kind {self.kind!r}")

    @property
    def center(self) -> HahnSeries | None:
        if self.kind == "point":
            return self.value
        if self.kind == "disc":
            return self.value.center
        return None

    def __str__(self):
        if self.kind in ("-inf", "+inf"):
            return self.kind
        if self.kind == "point":
            return f"(point {_series_sexpr(self.value)})"
        return str(self.value)


NEG_INF = Endpoint("-inf")
POS_INF = Endpoint("+inf")


def _above(x: HahnSeries, end: Endpoint) -> bool:
    """Lower-end condition for ``x``."""
    if end.kind == "-inf":
        return True
    if end.kind == "+inf":
        return False
    if end.kind == "point":
        return x >= end.value if end.inclusive else x > end.value
    disc = end.value
    inside = disc.contains(x)
    beyond = x > disc.center and not inside
    return beyond or (end.inclusive and inside)


def _below(x: HahnSeries, end: Endpoint) -> bool:
    if end.kind == "+inf":
        return True
    if end.kind == "-inf":
        return False
    if end.kind == "point":
        return x <= end.value if end.inclusive else x < end.value
    disc = end.value
    inside = disc.contains(x)
    beyond = x < disc.center and not inside
    return beyond or (end.inclusive and inside)


@dataclass(frozen=True)
class Point:
    value: HahnSeries
    dim = 1

    def contains(self, x):
        return x == self.value

    def centers(self):
        return [self.value]

    def radii(self):
        return []

    def __str__(self):
        return f"(point {_series_sexpr(self.value)})"


@dataclass(frozen=True)
class DiscPiece:
    disc: Disc
    dim = 1

    def contains(self, x):
        return self.disc.contains(x)

    def centers(self):
        return [self.disc.center]

    def radii(self):
        return [self.disc.radius]

    def __str__(self):
        return str(self.disc)


@dataclass(frozen=True)
class VInterval:
    lo: Endpoint
    hi: Endpoint
    dim = 1

    def contains(self, x):
        return _above(x, self.lo) and _below(x, self.hi)

    def centers(self):
        return [e.center for e in (self.lo, self.hi) if e.center is not None]

    def radii(self):
        return [e.value.radius for e in (self.lo, self.hi) if e.kind == "disc"]

    def __str__(self):
        def end(tag, e):
            return f"({tag} {e} {'true' if e.inclusive else 'false'})"
        return f"(vint {end('lo', self.lo)} {end('hi', self.hi)})"


@dataclass(frozen=True)
class HalfThin:
    """The part of a thin annulus on one side of its removed open disc.

    With ``side = +1`` this is ``(a, b]`` and with ``side = -1`` it is
    ``[b, a)``, where ``b`` is the closed disc of the given radius around
    ``center`` and ``a`` its maximal open subdisc containing ``center``.
    """

    center: HahnSeries
    radius: Fraction
    side: int = 1
    dim = 1

    def __post_init__(self):
        if self.side not in (1, -1):
            raise ValueError("side must be +1 or -1")
        object.__setattr__(self, "radius", Fraction(self.radius))

    def contains(self, x):
        d = x - self.center
        return not d.is_zero() and d.order == self.radius and d.sign() == self.side

    def centers(self):
        return [self.center]

    def radii(self):
        return [self.radius]

    def __str__(self):
        side = "+" if self.side > 0 else "-"
        return f"(halfthin {_series_sexpr(self.center)} {_rat(self.radius)} {side})"


@dataclass(frozen=True)
class RvPull:
    """Lift of an RV-set ``U x I^#`` translated by ``translate``.

    Only the class of the underlying RV-set is known, so the piece is
    opaque to membership tests; it spans ``res.grade + gamma.grade``
    coordinates.
    """

    res: ResCellList
    gamma: GammaSet
    translate: HahnSeries = HS_ZERO

    @property
    def dim(self) -> int:
        return self.res.grade + self.gamma.grade

    def __str__(self):
        return f"(rvpull {self.res} {self.gamma} {_series_sexpr(self.translate)})"


VfPiece = Union[Point, DiscPiece, VInterval, HalfThin, RvPull]
ConcretePiece = Union[Point, DiscPiece, VInterval, HalfThin]


@dataclass(frozen=True)
class Product:
    pieces: tuple = ()

    @property
    def dim(self) -> int:
        return sum(p.dim for p in self.pieces)

    def __str__(self):
        return "(prod" + "".join(" " + str(p) for p in self.pieces) + ")"


@dataclass(frozen=True)
class VfSet:
    terms: tuple[Product, ...] = ()

    @classmethod
    def of(cls, *items) -> "VfSet":
        """Each item is a piece or a product (tuple/list of pieces or Product)."""
        terms = []
        for it in items:
            if isinstance(it, Product):
                terms.append(it)
            elif isinstance(it, (tuple, list)):
                terms.append(Product(tuple(it)))
            else:
                terms.append(Product((it,)))
        return cls(tuple(terms))

    def union(self, other: "VfSet") -> "VfSet":
        return VfSet(self.terms + other.terms)

    @property
    def dim(self) -> int | None:
        return self.terms[0].dim if self.terms else None

    def __str__(self):
        return "(union" + "".join(" " + str(t) for t in self.terms) + ")"


# -- shell decomposition ----------------------------------------------------


@dataclass(frozen=True)
class Cell:
    """One summand of a decomposition, with its class in Z[X, Y^(2)]."""

    kind: str           # "point", "ray", "bopen" or "arc"
    center: HahnSeries
    klass: GradedYX = field(compare=False)
    detail: tuple = ()


_CELL_CLASS = {"point": ONE, RAY: YX, BOPEN: -X, "arc": X}


def _dedupe(items: Iterable[HahnSeries]) -> list[HahnSeries]:
    out: list[HahnSeries] = []
    for c in items:
        if c not in out:
            out.append(c)
    return out


def shell_decomposition(
    contains: Callable[[HahnSeries], bool],
    centers: Iterable[HahnSeries],
    radii: Iterable[Fraction],
) -> list[Cell]:
    """Decompose ``{x : contains(x)}`` into point, value-group and arc cells.

    ``contains`` must be a boolean combination of conditions on the sign
    of ``x - c`` and on ``v(x - c)`` against a radius, for ``c`` among
    ``centers`` and radii among ``radii``.
    """
    centers = _dedupe(centers) or [HS_ZERO]
    critical = {Fraction(r) for r in radii}
    for a, b in combinations(centers, 2):
        critical.add(valuation(a - b))
    out: list[Cell] = []
    _decompose(contains, centers, sorted(critical), centers[0], None, out)
    return out


def _gamma_sample(lo, hi) -> Fraction:
    if lo is None:
        return hi - 1
    if hi is None:
        return lo + 1
    return (lo + hi) / 2


def _decompose(contains, centers, critical, c, rho, out):
    # region: all of VF when rho is None, else the open disc v(x - c) > rho
    inside = [
        d for d in centers
        if d != c and (rho is None or valuation(d - c) > rho)
    ]
    if contains(c):
        out.append(Cell("point", c, ONE))
    ks = [k for k in critical if rho is None or k > rho]
    if rho is None and not ks:
        ks = [Fraction(0)]
    bounds = [rho] + ks + [None]
    for sigma in (1, -1):
        for lo, hi in zip(bounds, bounds[1:]):
            g = _gamma_sample(lo, hi)
            kind = RAY if lo is None or hi is None else BOPEN
            if contains(c + HahnSeries.monomial(sigma, g)):
                out.append(Cell(kind, c, _CELL_CLASS[kind], (sigma, lo, hi)))
        for k in ks:
            specials: dict[Fraction, HahnSeries] = {}
            for d in inside:
                diff = d - c
                if diff.order == k and diff.sign() == sigma:
                    specials.setdefault(abs(diff.leading_coefficient), d)
            mags = sorted(specials)
            if mags:
                samples = [mags[0] / 2]
                samples += [(a + b) / 2 for a, b in zip(mags, mags[1:])]
                samples.append(mags[-1] + 1)
            else:
                samples = [Fraction(1)]
            for m in samples:
                if contains(c + HahnSeries.monomial(sigma * m, k)):
                    out.append(Cell("arc", c, X, (sigma, k, m)))
            for m in mags:
                if rho is not None and not k > rho:
                    raise AssertionError("shell recursion must strictly increase the radius")
                _decompose(contains, centers, critical, specials[m], k, out)


def decompose_piece(p: ConcretePiece) -> list[Cell]:
    return shell_decomposition(p.contains, p.centers(), p.radii())


def pieces_intersect(p: ConcretePiece, q: ConcretePiece) -> bool:
    cells = shell_decomposition(
        lambda x: p.contains(x) and q.contains(x),
        p.centers() + q.centers(),
        p.radii() + q.radii(),
    )
    return bool(cells)


# -- classes and integration -------------------------------------------------


def assemble_pull(res: ResCellList, gamma: GammaSet) -> GradedYX:
    return assemble(res_class_of_cells(res), gamma)


def contract_piece(p: VfPiece) -> GradedYX:
    """Class of a piece in Z[X, Y^(2)] (a representative modulo 1 + 2YX + X)."""
    if isinstance(p, RvPull):
        return assemble_pull(p.res, p.gamma)
    if isinstance(p, VInterval):
        _check_interval(p)
    acc = ZERO
    for cell in decompose_piece(p):
        acc = acc + cell.klass
    return acc


def _check_interval(p: VInterval):
    if p.lo.kind == "+inf" or p.hi.kind == "-inf":
        raise EmptyInterval(f"interval {p} has reversed infinite ends")
    if not decompose_piece(p):
        raise EmptyInterval(f"interval {p} is empty")


def _coordinates(t: Product) -> list:
    coords: list = []
    for p in t.pieces:
        if isinstance(p, RvPull):
            coords.extend([None] * p.dim)
        else:
            coords.append(p)
    return coords


def validate(s: VfSet) -> None:
    """Raise unless the terms are nonempty, of one dimension and pairwise disjoint.

    Pulled-back RV pieces have no coordinates, so two terms are accepted
    as disjoint only when some coordinate where both are concrete
    witnesses it.
    """
    dims = {t.dim for t in s.terms}
    if len(dims) > 1:
        raise ValidationError(f"union mixes dimensions {sorted(dims)}")
    for t in s.terms:
        for p in t.pieces:
            if isinstance(p, VInterval):
                _check_interval(p)
    coords = [_coordinates(t) for t in s.terms]
    for i, j in combinations(range(len(s.terms)), 2):
        disjoint = any(
            p is not None and q is not None and not pieces_intersect(p, q)
            for p, q in zip(coords[i], coords[j])
        )
        if not disjoint:
            opaque = any(p is None or q is None for p, q in zip(coords[i], coords[j]))
            raise OverlappingPieces(
                i, j, "disjointness not witnessed by a concrete coordinate" if opaque else ""
            )


def product_class(t: Product) -> GradedYX:
    acc = ONE
    for p in t.pieces:
        acc = acc * contract_piece(p)
    return acc


def set_class(s: VfSet) -> GradedYX:
    """Sum over terms of the product of piece classes (no validation)."""
    acc = ZERO
    for t in s.terms:
        acc = acc + product_class(t)
    return acc


def integrate(s: VfSet) -> WForm:
    validate(s)
    return quotient_reduce(set_class(s))


def euler_g(s: VfSet) -> int:
    return specialize_g(integrate(s))


def euler_b(s: VfSet) -> int:
    return specialize_b(integrate(s))


# -- affine images -----------------------------------------------------------


def affine_piece(p: VfPiece, scale: HahnSeries, shift: HahnSeries) -> VfPiece:
    """Image of ``p`` under ``x -> scale*x + shift`` (``scale`` nonzero)."""
    if scale.is_zero():
        raise ValueError("scale must be nonzero")
    mu = scale.order
    neg = scale.sign() < 0

    def pt(x):
        return scale * x + shift

    def disc(d):
        return Disc(pt(d.center), d.radius + mu, d.kind)

    def end(e):
        if e.kind == "point":
            return Endpoint("point", pt(e.value), e.inclusive)
        if e.kind == "disc":
            return Endpoint("disc", disc(e.value), e.inclusive)
        if neg:
            return POS_INF if e.kind == "-inf" else NEG_INF
        return e

    if isinstance(p, Point):
        return Point(pt(p.value))
    if isinstance(p, DiscPiece):
        return DiscPiece(disc(p.disc))
    if isinstance(p, HalfThin):
        return HalfThin(pt(p.center), p.radius + mu, -p.side if neg else p.side)
    if isinstance(p, VInterval):
        lo, hi = end(p.lo), end(p.hi)
        return VInterval(hi, lo) if neg else VInterval(lo, hi)
    if isinstance(p, RvPull):
        return RvPull(p.res, p.gamma, pt(p.translate))
    raise TypeError(f"not a piece: {p!r}")


# -- rendering helpers -------------------------------------------------------


def _rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _series_sexpr(x: HahnSeries) -> str:
    return "(series" + "".join(f" (term {_rat(e)} {_rat(c)})" for e, c in x.terms) + ")"
