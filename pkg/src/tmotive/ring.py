"""The graded ring Z[X, Y^(2)] and its quotient Z^(2)[X].

``Z[X, Y^(2)] = Z + sum_{i>=1} (Z[Y]/(Y^2 + Y)) X^i``.  The quotient by
the ideal generated by ``1 + 2YX + X`` is free of rank two on ``{1, w}``
with ``w = YX``, ``w^2 = -w`` and ``X = -1 - 2w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == (0, 0):
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class GradedYX:
    """Element ``sum_i (m_i + n_i Y) X^i`` with ``n_0 = 0``.

    ``coeffs[i]`` is the pair ``(m_i, n_i)``; trailing zero degrees are
    trimmed so equal elements compare equal.
    """

    coeffs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        trimmed = _trim((int(m), int(n)) for m, n in self.coeffs)
        if trimmed and trimmed[0][1] != 0:
            raise ValueError("degree-0 component has no Y part")
        object.__setattr__(self, "coeffs", trimmed)

    @classmethod
    def from_dict(cls, parts: dict) -> "GradedYX":
        """``{degree: (m, n)}`` or ``{degree: m}``."""
        if not parts:
            return cls()
        top = max(parts)
        out = []
        for i in range(top + 1):
            v = parts.get(i, (0, 0))
            out.append((v, 0) if isinstance(v, int) else tuple(v))
        return cls(tuple(out))

    @classmethod
    def constant(cls, m: int) -> "GradedYX":
        return cls(((m, 0),))

    @classmethod
    def monomial(cls, degree: int, m: int = 1, n: int = 0) -> "GradedYX":
        if degree == 0 and n:
            raise ValueError("degree-0 component has no Y part")
        return cls(tuple([(0, 0)] * degree + [(m, n)]))

    @property
    def degree(self) -> int:
        """Top degree; -1 for zero."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def component(self, i: int) -> tuple[int, int]:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else (0, 0)

    def is_homogeneous(self) -> bool:
        return sum(1 for c in self.coeffs if c != (0, 0)) <= 1

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return GradedYX(tuple(
            (a[0] + b[0], a[1] + b[1])
            for a, b in ((self.component(i), other.component(i)) for i in range(n))
        ))

    __radd__ = __add__

    def __neg__(self):
        return GradedYX(tuple((-m, -n) for m, n in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return GradedYX()
        out = [[0, 0] for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, (m, n) in enumerate(self.coeffs):
            for j, (p, q) in enumerate(other.coeffs):
                # (m + nY)(p + qY) with Y^2 = -Y
                out[i + j][0] += m * p
                out[i + j][1] += m * q + n * p - n * q
        return GradedYX(tuple(tuple(c) for c in out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        acc = ONE
        for _ in range(k):
            acc = acc * self
        return acc

    def __str__(self):
        parts = []
        for i, (m, n) in enumerate(self.coeffs):
            if (m, n) == (0, 0):
                continue
            if i == 0:
                parts.append(str(m))
            else:
                x = "X" if i == 1 else f"X^{i}"
                parts.append(f"({m} + {n}*Y)*{x}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"GradedYX({str(self)!r})"


def _coerce(x) -> GradedYX:
    if isinstance(x, GradedYX):
        return x
    if isinstance(x, int):
        return GradedYX.constant(x)
    raise TypeError(f"cannot combine GradedYX with {type(x).__name__}")


ZERO = GradedYX()
ONE = GradedYX.constant(1)
X = GradedYX.monomial(1)
YX = GradedYX.monomial(1, 0, 1)


@dataclass(frozen=True)
class WForm:
    """``a + b*w`` in Z^(2)[X], where ``w = YX`` and ``w^2 = -w``."""

    a: int = 0
    b: int = 0

    def __add__(self, other):
        other = _wcoerce(other)
        return WForm(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return WForm(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-_wcoerce(other))

    def __mul__(self, other):
        other = _wcoerce(other)
        return WForm(
            self.a * other.a,
            self.a * other.b + other.a * self.b - self.b * other.b,
        )

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self):
        return f"{self.a} + {self.b}*w"


def _wcoerce(x) -> WForm:
    if isinstance(x, WForm):
        return x
    if isinstance(x, int):
        return WForm(x, 0)
    raise TypeError(f"cannot combine WForm with {type(x).__name__}")


W_ONE = WForm(1, 0)
W = WForm(0, 1)
X_IMAGE = WForm(-1, -2)


def yx_add(x: GradedYX, y: GradedYX) -> GradedYX:
    return x + y


def yx_mul(x: GradedYX, y: GradedYX) -> GradedYX:
    return x * y


def w_add(x: WForm, y: WForm) -> WForm:
    return x + y


def w_mul(x: WForm, y: WForm) -> WForm:
    return x * y


def generator() -> GradedYX:
    """The image ``1 + 2YX + X`` of ``1_K + [P]``."""
    return GradedYX(((1, 0), (1, 2)))


def retract_g(x: GradedYX) -> tuple[int, ...]:
    """Substitute ``Y = -1``; coefficients of the resulting polynomial in X."""
    return _trim_int(m - n for m, n in x.coeffs)


def retract_b(x: GradedYX) -> tuple[int, ...]:
    """Substitute ``Y = 0``."""
    return _trim_int(m for m, _ in x.coeffs)


def _trim_int(values: Iterable[int]) -> tuple[int, ...]:
    out = list(values)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def eval_poly(coeffs: tuple[int, ...], x: int) -> int:
    return sum(c * x**i for i, c in enumerate(coeffs))


def quotient_reduce(x: GradedYX) -> WForm:
    """Image in Z^(2)[X].

    ``X^i`` goes to 1 for even ``i`` and to ``-1 - 2w`` for odd ``i``
    (since ``(1 + 2w)^2 = 1``), and ``Y X^i`` goes to ``w`` for all
    ``i >= 1`` (since ``w X = w``).
    """
    acc = WForm()
    for i, (m, n) in enumerate(x.coeffs):
        if i == 0:
            acc = acc + WForm(m, 0)
            continue
        xpow = W_ONE if i % 2 == 0 else X_IMAGE
        acc = acc + m * xpow + WForm(0, n)
    return acc


def specialize_g(x: WForm) -> int:
    """``w -> -1`` (equivalently ``X -> 1``)."""
    return x.a - x.b


def specialize_b(x: WForm) -> int:
    """``w -> 0`` (equivalently ``X -> -1``)."""
    return x.a
