"""Finite-support Hahn series over Q with rational exponents.

Elements of ``Q((t^Q))`` whose support is finite.  The valuation of a
nonzero series is its least exponent; the ordering is the one where a
series is positive iff its leading coefficient is.  Besides the field
operations the module provides the leading-term map ``rv``, the residue
map ``res`` and the signed valuation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

DEFAULT_ORDER = 8
ORDER_ENV = "TMOTIVE_TRUNC_ORDER"

LT, EQ, GT = "LT", "EQ", "GT"


def default_order() -> Fraction:
    """Truncation order for inversion, overridable through the environment."""
    raw = os.environ.get(ORDER_ENV)
    if raw is None or not raw.strip():
        return Fraction(DEFAULT_ORDER)
    order = Fraction(raw.strip())
    if order <= 0:
        raise ValueError(f"{ORDER_ENV} must be positive, got {raw!r}")
    return order


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use exact rationals")
    return Fraction(x)


def render_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _render_exponent(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e.numerator}/{e.denominator})"


@dataclass(frozen=True)
class HahnSeries:
    """A finite sum of terms ``c * t^e``.

    ``terms`` holds ``(exponent, coefficient)`` pairs with strictly
    increasing exponents and nonzero coefficients.  Use the constructors
    below rather than building the tuple by hand.
    """

    terms: tuple[tuple[Fraction, Fraction], ...] = ()

    def __post_init__(self):
        prev = None
        for e, c in self.terms:
            if not isinstance(e, Fraction) or not isinstance(c, Fraction):
                raise TypeError("exponents and coefficients must be Fractions")
            if c == 0:
                raise ValueError("zero coefficient stored in HahnSeries")
            if prev is not None and e <= prev:
                raise ValueError("exponents must be strictly increasing")
            prev = e

    # -- construction ---------------------------------------------------

    @classmethod
    def from_mapping(cls, mapping: Mapping) -> "HahnSeries":
        acc: dict[Fraction, Fraction] = {}
        for e, c in mapping.items():
            e, c = as_rational(e), as_rational(c)
            acc[e] = acc.get(e, Fraction(0)) + c
        return cls(tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple]) -> "HahnSeries":
        """Build from ``(exponent, coefficient)`` pairs, summing repeats."""
        acc: dict[Fraction, Fraction] = {}
        for e, c in pairs:
            e, c = as_rational(e), as_rational(c)
            acc[e] = acc.get(e, Fraction(0)) + c
        return cls(tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    @classmethod
    def monomial(cls, coeff=1, exp=0) -> "HahnSeries":
        coeff, exp = as_rational(coeff), as_rational(exp)
        if coeff == 0:
            return ZERO
        return cls(((exp, coeff),))

    @classmethod
    def constant(cls, c) -> "HahnSeries":
        return cls.monomial(c, 0)

    @classmethod
    def coerce(cls, x) -> "HahnSeries":
        if isinstance(x, HahnSeries):
            return x
        return cls.constant(x)

    # -- inspection -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def support(self) -> tuple[Fraction, ...]:
        return tuple(e for e, _ in self.terms)

    def coefficient(self, exp) -> Fraction:
        exp = as_rational(exp)
        for e, c in self.terms:
            if e == exp:
                return c
        return Fraction(0)

    @property
    def order(self) -> Fraction:
        """Least exponent of the support."""
        if not self.terms:
            raise ValueError("the zero series has no order")
        return self.terms[0][0]

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            raise ValueError("the zero series has no leading coefficient")
        return self.terms[0][1]

    def sign(self) -> int:
        if not self.terms:
            return 0
        return 1 if self.terms[0][1] > 0 else -1

    def in_valuation_ring(self) -> bool:
        return not self.terms or self.terms[0][0] >= 0

    def in_maximal_ideal(self) -> bool:
        return not self.terms or self.terms[0][0] > 0

    def truncate(self, order) -> "HahnSeries":
        """Drop every term of exponent ``>= order``."""
        order = as_rational(order)
        return HahnSeries(tuple((e, c) for e, c in self.terms if e < order))

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = HahnSeries.coerce(other)
        return HahnSeries.from_terms(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return HahnSeries(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-HahnSeries.coerce(other))

    def __rsub__(self, other):
        return HahnSeries.coerce(other) - self

    def __mul__(self, other):
        other = HahnSeries.coerce(other)
        return HahnSeries.from_terms(
            (e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms
        )

    __rmul__ = __mul__

    def shift(self, exp) -> "HahnSeries":
        """Multiply by ``t^exp``."""
        exp = as_rational(exp)
        return HahnSeries(tuple((e + exp, c) for e, c in self.terms))

    def inverse(self, order=None) -> "HahnSeries":
        return hs_inv(self, order)

    # -- ordering -------------------------------------------------------

    def __lt__(self, other):
        return hs_cmp(self, HahnSeries.coerce(other)) == LT

    def __le__(self, other):
        return hs_cmp(self, HahnSeries.coerce(other)) != GT

    def __gt__(self, other):
        return hs_cmp(self, HahnSeries.coerce(other)) == GT

    def __ge__(self, other):
        return hs_cmp(self, HahnSeries.coerce(other)) != LT

    # -- rendering ------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"{render_rational(c)}*t^{_render_exponent(e)}" for e, c in self.terms
        )

    def __repr__(self):
        return f"HahnSeries({str(self)!r})"


ZERO = HahnSeries()
ONE = HahnSeries(((Fraction(0), Fraction(1)),))
T = HahnSeries(((Fraction(1), Fraction(1)),))


@dataclass(frozen=True)
class RvElem:
    """Leading term ``(q, c)`` of a series, or the zero element when ``q`` is None."""

    q: Fraction | None = None
    c: Fraction | None = None

    def __post_init__(self):
        if (self.q is None) != (self.c is None):
            raise ValueError("RvElem needs both exponent and coefficient, or neither")
        if self.c is not None and self.c == 0:
            raise ValueError("RvElem coefficient must be nonzero")

    def is_zero(self) -> bool:
        return self.q is None

    def __mul__(self, other):
        return rv_mul(self, other)

    def __str__(self):
        if self.q is None:
            return "0"
        return f"({render_rational(self.q)}, {render_rational(self.c)})"


RV_ZERO = RvElem()


@dataclass(frozen=True)
class GammaElem:
    """Signed value group element, stored additively.

    ``sign`` is +1 or -1 and ``q`` the exponent; the zero point (image of
    0) has both fields None.  Multiplicatively the element is
    ``sign * e^(-q)``.
    """

    sign: int | None = None
    q: Fraction | None = None

    def __post_init__(self):
        if (self.sign is None) != (self.q is None):
            raise ValueError("GammaElem needs both sign and exponent, or neither")
        if self.sign is not None and self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def is_zero_point(self) -> bool:
        return self.sign is None

    @property
    def absolute(self) -> Fraction | None:
        """The unsigned value (None stands for infinity)."""
        return self.q

    def __str__(self):
        if self.sign is None:
            return "0"
        return f"({'+' if self.sign > 0 else '-'}, {render_rational(self.q)})"

    def render_multiplicative(self) -> str:
        if self.sign is None:
            return "0"
        prefix = "" if self.sign > 0 else "-"
        return f"{prefix}e^{_render_exponent(-self.q)}"


ZERO_POINT = GammaElem()


def hs_add(x: HahnSeries, y: HahnSeries) -> HahnSeries:
    return x + y


def hs_mul(x: HahnSeries, y: HahnSeries) -> HahnSeries:
    return x * y


def hs_inv(x: HahnSeries, order=None) -> HahnSeries:
    """Truncated inverse of ``x``.

    Writes ``x = a t^v (1 + eps)`` and sums the geometric series in
    ``-eps`` up to (excluding) exponent ``order``.  The result ``y`` has
    support in ``[-v, -v + order)`` and ``x*y - 1`` has only terms of
    exponent ``>= order``.
    """
    if x.is_zero():
        raise ZeroDivisionError("inverse of the zero series")
    order = default_order() if order is None else as_rational(order)
    if order <= 0:
        raise ValueError("truncation order must be positive")
    v, a = x.terms[0]
    neg_eps = HahnSeries(tuple((e - v, -c / a) for e, c in x.terms[1:]))
    acc = ONE
    power = ONE
    while True:
        power = (power * neg_eps).truncate(order)
        if power.is_zero():
            break
        acc = acc + power
    return HahnSeries(tuple((e - v, c / a) for e, c in acc.terms))


def hs_cmp(x: HahnSeries, y: HahnSeries) -> str:
    s = (x - y).sign()
    return LT if s < 0 else GT if s > 0 else EQ


def hs_val(x: HahnSeries) -> GammaElem:
    if x.is_zero():
        return ZERO_POINT
    return GammaElem(x.sign(), x.order)


def hs_rv(x: HahnSeries) -> RvElem:
    if x.is_zero():
        return RV_ZERO
    e, c = x.terms[0]
    return RvElem(e, c)


def rv_mul(s: RvElem, u: RvElem) -> RvElem:
    if s.is_zero() or u.is_zero():
        return RV_ZERO
    return RvElem(s.q + u.q, s.c * u.c)


def hs_res(x: HahnSeries) -> Fraction:
    if x.is_zero() or x.order < 0:
        return Fraction(0)
    return x.coefficient(0)


def valuation(x: HahnSeries) -> Fraction | None:
    """Unsigned valuation; None stands for the value of 0 (infinity)."""
    return None if x.is_zero() else x.order
