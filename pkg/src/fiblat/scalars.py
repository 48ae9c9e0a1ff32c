"""Exact arithmetic in the quadratic field Q(sqrt(D)).

Every coefficient produced anywhere in this package is a QuadScalar: an
exact element a + b*sqrt(D) with rational a, b.  No floating point is used,
so "equals zero" always means exactly zero.

When D is a perfect square the root part is folded into the rational part,
so the normalized form is unique and equality is structural.
"""

from __future__ import annotations

import math
from fractions import Fraction


class MixedRadicandError(TypeError):
    """Arithmetic or comparison between scalars over different radicands."""


_ZERO = Fraction(0)


_SQUARE_ROOTS: dict = {}


def _isqrt_exact(d: int) -> int | None:
    try:
        return _SQUARE_ROOTS[d]
    except KeyError:
        r = math.isqrt(d)
        root = r if r * r == d else None
        _SQUARE_ROOTS[d] = root
        return root


class QuadScalar:
    """An exact number a + b*sqrt(D), D a positive integer.

    Immutable.  Supports +, -, *, /, ** with other QuadScalar of the same D
    and with int/Fraction (coerced).  Division is exact; the inverse of
    a + b*sqrt(D) exists iff a^2 != D*b^2.
    """

    __slots__ = ("rat_part", "root_part", "D", "_hash")

    def __init__(self, rat_part, root_part=0, D: int = 1):
        if D < 1:
            raise ValueError(f"radicand must be a positive integer, got {D}")
        a = rat_part if type(rat_part) is Fraction else Fraction(rat_part)
        b = root_part if type(root_part) is Fraction else Fraction(root_part)
        if b:
            r = _isqrt_exact(D)
            if r is not None:
                # perfect square: sqrt(D) = r is rational, fold it in
                a += b * r
                b = _ZERO
        object.__setattr__(self, "rat_part", a)
        object.__setattr__(self, "root_part", b)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QuadScalar is immutable")

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "QuadScalar":
        if isinstance(other, QuadScalar):
            if other.D != self.D and other.root_part and self.root_part:
                raise MixedRadicandError(
                    f"cannot mix sqrt({self.D}) with sqrt({other.D})"
                )
            if other.D != self.D:
                # at least one side is purely rational; unify radicands
                if other.root_part:
                    return other
                return QuadScalar(other.rat_part, 0, self.D)
            return other
        if isinstance(other, (int, Fraction)):
            return QuadScalar(other, 0, self.D)
        return NotImplemented  # type: ignore[return-value]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if type(other) is QuadScalar and other.D == self.D:
            return QuadScalar(
                self.rat_part + other.rat_part, self.root_part + other.root_part, self.D
            )
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        D = self.D if self.root_part else o.D
        return QuadScalar(self.rat_part + o.rat_part, self.root_part + o.root_part, D)

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.rat_part, -self.root_part, self.D)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is QuadScalar and other.D == self.D:
            a, b, c, e = self.rat_part, self.root_part, other.rat_part, other.root_part
            return QuadScalar(a * c + b * e * self.D, a * e + b * c, self.D)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        D = self.D if self.root_part else o.D
        a, b, c, e = self.rat_part, self.root_part, o.rat_part, o.root_part
        return QuadScalar(a * c + b * e * D, a * e + b * c, D)

    __rmul__ = __mul__

    def inverse(self) -> "QuadScalar":
        a, b = self.rat_part, self.root_part
        n = a * a - b * b * self.D
        if n == 0:
            raise ZeroDivisionError(f"{self!r} is not invertible")
        return QuadScalar(a / n, -b / n, self.D)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadScalar(1, 0, self.D)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates -------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.rat_part) or bool(self.root_part)

    def is_rational(self) -> bool:
        return not self.root_part

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.rat_part == other and not self.root_part
        if isinstance(other, QuadScalar):
            if self.root_part and other.root_part and self.D != other.D:
                raise MixedRadicandError(
                    f"cannot compare sqrt({self.D}) with sqrt({other.D})"
                )
            return self.rat_part == other.rat_part and self.root_part == other.root_part
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.rat_part, self.root_part, self.D if self.root_part else 1))
            object.__setattr__(self, "_hash", h)
        return h

    # -- presentation -----------------------------------------------------

    def __repr__(self):
        if not self.root_part:
            return f"QuadScalar({self.rat_part})"
        return f"QuadScalar({self.rat_part}, {self.root_part}, D={self.D})"

    def __str__(self):
        if not self.root_part:
            return str(self.rat_part)
        root = f"{self.root_part}*sqrt({self.D})"
        if not self.rat_part:
            return root
        sign = "+" if self.root_part > 0 else "-"
        mag = abs(self.root_part)
        return f"{self.rat_part} {sign} {mag}*sqrt({self.D})"

    def to_json(self) -> list[int]:
        """Serialize as [rat_num, rat_den, root_num, root_den]."""
        return [
            self.rat_part.numerator,
            self.rat_part.denominator,
            self.root_part.numerator,
            self.root_part.denominator,
        ]

    @classmethod
    def from_json(cls, data, D: int) -> "QuadScalar":
        rn, rd, sn, sd = data
        return cls(Fraction(rn, rd), Fraction(sn, sd), D)


def sqrt_of(D: int) -> QuadScalar:
    """The exact scalar sqrt(D)."""
    return QuadScalar(0, 1, D)


def one(D: int = 1) -> QuadScalar:
    return QuadScalar(1, 0, D)


def zero(D: int = 1) -> QuadScalar:
    return QuadScalar(0, 0, D)
