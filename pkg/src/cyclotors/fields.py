"""Exact arithmetic in Q(i) and Q(sqrt(-3)).

A field element is num/den with num in the ring of integers and den a
positive rational integer.  Denominators are rationalized by multiplying
through by the conjugate, and kept minimal: gcd(content(num), den) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .rings import (
    QInt,
    RingMismatchError,
    RingTag,
    SquareClass,
    nth_root as ring_nth_root,
    squarefree_part,
)


@dataclass(frozen=True, init=False)
class QRat:
    num: QInt
    den: int

    def __init__(self, num, den: int = 1, tag: RingTag | None = None):
        if isinstance(num, int):
            if tag is None:
                raise TypeError("a tag is required for integer numerators")
            num = QInt(num, 0, tag)
        elif tag is not None and num.tag is not tag:
            raise RingMismatchError(f"{num.tag.name} vs {tag.name}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(num.a, num.b, den)
        if num.is_zero():
            g = den
        if g > 1:
            num = QInt(num.a // g, num.b // g, num.tag)
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def tag(self) -> RingTag:
        return self.num.tag

    @classmethod
    def of(cls, value, tag: RingTag) -> "QRat":
        """Coerce an int, Fraction, QInt or QRat into the field."""
        if isinstance(value, QRat):
            if value.tag is not tag:
                raise RingMismatchError(f"{value.tag.name} vs {tag.name}")
            return value
        if isinstance(value, QInt):
            return cls(value, 1, tag)
        if isinstance(value, Fraction):
            return cls(value.numerator, value.denominator, tag)
        if isinstance(value, int):
            return cls(value, 1, tag)
        raise TypeError(f"cannot coerce {value!r} into {tag.name}")

    @classmethod
    def gen(cls, tag: RingTag) -> "QRat":
        return cls(QInt.gen(tag))

    def _coerce(self, other):
        if isinstance(other, (QRat, QInt, int, Fraction)):
            return QRat.of(other, self.tag)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QRat(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return QRat(-self.num, self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "QRat":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        c = self.num.conj()
        return QRat(c * self.den, self.num.norm())

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return QRat(self.num**n, self.den**n)

    def conj(self) -> "QRat":
        return QRat(self.num.conj(), self.den)

    def norm(self) -> Fraction:
        return Fraction(self.num.norm(), self.den * self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def is_integral(self) -> bool:
        return self.den == 1

    def height(self) -> int:
        return max(self.num.norm(), self.den * self.den)

    def __eq__(self, other):
        if isinstance(other, QRat):
            return self.num == other.num and self.den == other.den
        if isinstance(other, QInt):
            return self.den == 1 and self.num == other
        if isinstance(other, int):
            return self.den == 1 and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def sort_key(self):
        """Order by height, then coordinates with positives before negatives."""
        return (
            self.height(),
            self.den,
            abs(self.num.a),
            self.num.a < 0,
            abs(self.num.b),
            self.num.b < 0,
        )

    def __str__(self):
        return format_qrat(self)

    def __repr__(self):
        return f"QRat({format_qrat(self)!r}, {self.tag.name})"


def format_qrat(x: QRat) -> str:
    s = str(x.num)
    if x.den == 1:
        return s
    if x.num.a != 0 and x.num.b != 0:
        s = f"({s})"
    return f"{s}/{x.den}"


def field_arith(x: QRat, y: QRat | None, which: str) -> QRat:
    if which == "inv":
        return x.inv()
    if x.tag is not y.tag:
        raise RingMismatchError(f"{x.tag.name} vs {y.tag.name}")
    if which == "add":
        return x + y
    if which == "sub":
        return x - y
    if which == "mul":
        return x * y
    if which == "div":
        return x / y
    raise ValueError(f"unknown operation {which!r}")


def nth_root(x: QRat, n: int) -> QRat | None:
    """An n-th root of x in the field, or None."""
    if x.is_zero():
        return x
    # x = num*den^(n-1) / den^n
    r = ring_nth_root(x.num * x.den ** (n - 1), n)
    if r is None:
        return None
    return QRat(r, x.den)


def is_square(x: QRat) -> QRat | None:
    """A square root of x when x is a square in the field, else None."""
    return nth_root(x, 2)


def squarefree_part_field(x: QRat) -> SquareClass:
    if x.is_zero():
        raise ValueError("zero has no square class")
    return squarefree_part(x.num * x.den)


def is_ring_integral(x: QRat) -> QInt | None:
    return x.num if x.den == 1 else None
