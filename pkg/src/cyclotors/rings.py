"""Arithmetic in the Euclidean rings Z[i] and Z[w].

Elements are stored as a pair of integer coordinates in the basis {1, i} or
{1, w}, where w = (1 - sqrt(-3))/2 satisfies w^2 - w + 1 = 0.  Both rings are
UFDs, so every nonzero element factors uniquely as a unit times canonical
primes; canonical associates are fixed by an exact sector test on the
coordinates.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd, isqrt

from sympy import factorint, isprime
from sympy.solvers.diophantine.diophantine import cornacchia

DEFAULT_FACTOR_BOUND = 10**24


class RingMismatchError(ValueError):
    """Operands live in different rings."""


class FactorBoundError(ArithmeticError):
    """An integer could not be factored within the configured bound."""

    def __init__(self, n: int, bound: int):
        super().__init__(f"cannot factor {n} within bound {bound}")
        self.n = n
        self.bound = bound


class RingTag(enum.Enum):
    GAUSSIAN = "Qi"
    OMEGA = "Qw3"

    @property
    def symbol(self) -> str:
        return "i" if self is RingTag.GAUSSIAN else "w"

    @property
    def unit_count(self) -> int:
        return 4 if self is RingTag.GAUSSIAN else 6

    @classmethod
    def from_name(cls, name: str) -> "RingTag":
        key = name.strip().lower().replace(" ", "")
        if key in ("qi", "q(i)", "gaussian", "z[i]", "i"):
            return cls.GAUSSIAN
        if key in ("qw", "qw3", "q(w)", "q(sqrt(-3))", "omega", "z[w]", "w"):
            return cls.OMEGA
        raise ValueError(f"unknown field tag {name!r} (expected Qi or Qw3)")


class SplitType(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


def factor_bound() -> int:
    """Current factoring bound; ``QT_FACTOR_BOUND`` overrides the default."""
    env = os.environ.get("QT_FACTOR_BOUND")
    return int(env) if env else DEFAULT_FACTOR_BOUND


@dataclass(frozen=True)
class QInt:
    """An element a + b*i of Z[i] or a + b*w of Z[w]."""

    a: int
    b: int
    tag: RingTag

    def __post_init__(self):
        if not isinstance(self.tag, RingTag):
            raise TypeError(f"tag must be a RingTag, got {self.tag!r}")

    @classmethod
    def from_int(cls, n: int, tag: RingTag) -> "QInt":
        return cls(n, 0, tag)

    @classmethod
    def gen(cls, tag: RingTag) -> "QInt":
        """i or w."""
        return cls(0, 1, tag)

    def _coerce(self, other) -> "QInt":
        if isinstance(other, QInt):
            if other.tag is not self.tag:
                raise RingMismatchError(f"{self.tag.name} vs {other.tag.name}")
            return other
        if isinstance(other, int):
            return QInt(other, 0, self.tag)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QInt(self.a + o.a, self.b + o.b, self.tag)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QInt(self.a - o.a, self.b - o.b, self.tag)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return QInt(-self.a, -self.b, self.tag)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.a, self.b, o.a, o.b
        if self.tag is RingTag.GAUSSIAN:
            return QInt(a * c - b * d, a * d + b * c, self.tag)
        # w^2 = w - 1
        return QInt(a * c - b * d, a * d + b * c + b * d, self.tag)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent in a ring")
        result = QInt(1, 0, self.tag)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "QInt":
        if self.tag is RingTag.GAUSSIAN:
            return QInt(self.a, -self.b, self.tag)
        # conj(w) = 1 - w
        return QInt(self.a + self.b, -self.b, self.tag)

    def norm(self) -> int:
        a, b = self.a, self.b
        if self.tag is RingTag.GAUSSIAN:
            return a * a + b * b
        return a * a + a * b + b * b

    def content(self) -> int:
        return gcd(self.a, self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, QInt):
            return self.tag is other.tag and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.tag))

    def sort_key(self):
        return (self.norm(), self.a, self.b)

    def __str__(self):
        return format_qint(self)

    def __repr__(self):
        return f"QInt({format_qint(self)!r}, {self.tag.name})"


def format_qint(z: QInt) -> str:
    sym = z.tag.symbol
    a, b = z.a, z.b
    if b == 0:
        return str(a)
    if abs(b) == 1:
        tail = sym
    else:
        tail = f"{abs(b)}*{sym}"
    if a == 0:
        return tail if b > 0 else "-" + tail
    return f"{a}{'+' if b > 0 else '-'}{tail}"


def _check_same(x: QInt, y: QInt) -> None:
    if x.tag is not y.tag:
        raise RingMismatchError(f"{x.tag.name} vs {y.tag.name}")


def ring_arith(x: QInt, y: QInt | None, which: str) -> QInt:
    """Dispatch add/sub/mul/neg/conj by name."""
    if which == "neg":
        return -x
    if which == "conj":
        return x.conj()
    _check_same(x, y)
    if which == "add":
        return x + y
    if which == "sub":
        return x - y
    if which == "mul":
        return x * y
    raise ValueError(f"unknown operation {which!r}")


def norm(z: QInt) -> int:
    return z.norm()


def units(tag: RingTag) -> tuple[QInt, ...]:
    """All units, listed as successive powers of i (or of w)."""
    if tag is RingTag.GAUSSIAN:
        return tuple(QInt(a, b, tag) for a, b in ((1, 0), (0, 1), (-1, 0), (0, -1)))
    return tuple(
        QInt(a, b, tag)
        for a, b in ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))
    )


def unit_index(u: QInt) -> int:
    """k such that u = gen^k (gen = i or w)."""
    for k, v in enumerate(units(u.tag)):
        if v == u:
            return k
    raise ValueError(f"{u} is not a unit")


def units_mod_sign(tag: RingTag) -> tuple[QInt, ...]:
    """Representatives of units modulo {1, -1}."""
    return units(tag)[: tag.unit_count // 2]


def _round_half_down(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0); exact halves go toward -infinity."""
    return -((den - 2 * num) // (2 * den))


def divrem(x: QInt, y: QInt) -> tuple[QInt, QInt]:
    _check_same(x, y)
    if y.is_zero():
        raise ZeroDivisionError("division by zero in " + x.tag.name)
    n = y.norm()
    p = x * y.conj()
    q = QInt(_round_half_down(p.a, n), _round_half_down(p.b, n), x.tag)
    return q, x - q * y


def divexact(x: QInt, y: QInt) -> QInt | None:
    """x / y when y divides x, otherwise None."""
    _check_same(x, y)
    if y.is_zero():
        raise ZeroDivisionError("division by zero in " + x.tag.name)
    n = y.norm()
    p = x * y.conj()
    if p.a % n or p.b % n:
        return None
    return QInt(p.a // n, p.b // n, x.tag)


def divides(d: QInt, x: QInt) -> bool:
    if d.is_zero():
        return x.is_zero()
    return divexact(x, d) is not None


def _in_sector(z: QInt) -> bool:
    if z.tag is RingTag.GAUSSIAN:
        return z.a > 0 and z.b >= 0
    # argument in [0, pi/3): imaginary part -b*sqrt(3)/2 >= 0 and a + b > 0
    return z.b <= 0 and z.a + z.b > 0


def canonical_associate(z: QInt) -> tuple[QInt, QInt]:
    """Return (u, c) with c = u*z the unique associate in the canonical sector."""
    if z.is_zero():
        raise ValueError("zero has no canonical associate")
    for u in units(z.tag):
        c = u * z
        if _in_sector(c):
            return u, c
    raise AssertionError(f"no associate of {z} in the canonical sector")


def canonical(z: QInt) -> QInt:
    return canonical_associate(z)[1]


def gcd_q(x: QInt, y: QInt) -> QInt:
    """Canonical greatest common divisor by the Euclidean algorithm."""
    _check_same(x, y)
    if x.is_zero() and y.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not y.is_zero():
        x, y = y, divrem(x, y)[1]
    return canonical(x)


def associated(x: QInt, y: QInt) -> bool:
    if x.is_zero() or y.is_zero():
        return x.is_zero() and y.is_zero()
    return canonical(x) == canonical(y)


@dataclass(frozen=True)
class QPrime:
    value: QInt
    residue_char: int
    split_type: SplitType
    residue_size: int

    @property
    def tag(self) -> RingTag:
        return self.value.tag

    def norm(self) -> int:
        return self.value.norm()


def splitting_type(p: int, tag: RingTag) -> tuple[SplitType, QPrime]:
    """Decomposition type of the rational prime p and a canonical prime above it."""
    if p < 2 or not isprime(p):
        raise ValueError(f"{p} is not a rational prime")
    if tag is RingTag.GAUSSIAN:
        ramified, split = p == 2, p % 4 == 1
    else:
        ramified, split = p == 3, p % 3 == 1
    if not (ramified or split):
        return SplitType.INERT, QPrime(QInt(p, 0, tag), p, SplitType.INERT, p * p)
    kind = SplitType.RAMIFIED if ramified else SplitType.SPLIT
    return kind, QPrime(_prime_of_norm(p, tag), p, kind, p)


def _prime_of_norm(p: int, tag: RingTag) -> QInt:
    # Cornacchia gives x^2 + y^2 = p, or x^2 + 3y^2 = p for Z[w]
    # (x + y*sqrt(-3) = (x + y) - 2y*w).
    if tag is RingTag.GAUSSIAN:
        if p == 2:
            return QInt(1, 1, tag)
        x, y = sorted(next(iter(cornacchia(1, 1, p))), reverse=True)
        z = QInt(x, y, tag)
    else:
        if p == 3:
            z = QInt(2, -1, tag)
        else:
            x, y = next(iter(cornacchia(1, 3, p)))
            z = QInt(x + y, -2 * y, tag)
    assert z.norm() == p
    return canonical(z)


def primes_above(p: int, tag: RingTag) -> tuple[QPrime, ...]:
    kind, pi = splitting_type(p, tag)
    if kind is not SplitType.SPLIT:
        return (pi,)
    other = canonical(pi.value.conj())
    return (pi, QPrime(other, p, kind, p))


def as_prime(z: QInt) -> QPrime:
    """The canonical prime associated to z; ValueError if z is not prime."""
    n = z.norm()
    for p in (n, isqrt(n)):
        if p < 2 or not isprime(p):
            continue
        for pi in primes_above(p, z.tag):
            if associated(pi.value, z):
                return pi
    raise ValueError(f"{z} is not a prime of the ring of integers of {z.tag.value}")


@lru_cache(maxsize=4096)
def _factor_integer(n: int, bound: int) -> tuple[tuple[int, int], ...]:
    if n <= bound:
        fac = factorint(n)
    else:
        fac = factorint(n, limit=isqrt(bound), use_rho=False, use_pm1=False, use_ecm=False)
        if any(not isprime(q) for q in fac):
            raise FactorBoundError(n, bound)
    return tuple(sorted(fac.items()))


def factor_integer(n: int) -> tuple[tuple[int, int], ...]:
    """Factor a positive rational integer; integers above the bound are only
    attempted by trial division up to sqrt(bound)."""
    if n < 1:
        raise ValueError("expected a positive integer")
    return _factor_integer(n, factor_bound())


@dataclass(frozen=True)
class Factorization:
    unit: QInt
    factors: tuple[tuple[QPrime, int], ...]

    def value(self) -> QInt:
        z = self.unit
        for pi, e in self.factors:
            z = z * pi.value**e
        return z

    def __str__(self):
        parts = [f"({u})" for u in [self.unit] if u != 1]
        for pi, e in self.factors:
            parts.append(f"({pi.value})" + (f"^{e}" if e > 1 else ""))
        return " * ".join(parts) or "1"


def factor(z: QInt) -> Factorization:
    """Factor z as unit * product of canonical prime powers."""
    if z.is_zero():
        raise ValueError("cannot factor zero")
    tag = z.tag
    g = z.content()
    rest = QInt(z.a // g, z.b // g, tag)
    rational = {q for q, _ in factor_integer(g)} | {q for q, _ in factor_integer(rest.norm())}
    found = []
    for q in sorted(rational):
        for pi in primes_above(q, tag):
            e = 0
            while True:
                w = divexact(z, pi.value)
                if w is None:
                    break
                z, e = w, e + 1
            if e:
                found.append((pi, e))
    if not z.is_unit():
        raise AssertionError(f"leftover non-unit {z} after factoring")
    found.sort(key=lambda f: f[0].value.sort_key())
    return Factorization(z, tuple(found))


@dataclass(frozen=True)
class SquareClass:
    """Square-free representative of an element modulo nonzero squares.

    ``rep`` is a unit-class representative (1 or i, resp. 1 or w) times a
    product of distinct canonical primes.
    """

    rep: QInt

    @property
    def tag(self) -> RingTag:
        return self.rep.tag

    def is_trivial(self) -> bool:
        return self.rep == 1

    def __str__(self):
        return str(self.rep)


def unit_square_class(u: QInt) -> QInt:
    """Reduce a unit modulo squares of units to 1 or i (resp. 1 or w)."""
    # unit groups are cyclic of even order, so squares are the even powers
    return units(u.tag)[unit_index(u) % 2]


def squarefree_part(z: QInt) -> SquareClass:
    f = factor(z)
    rep = unit_square_class(f.unit)
    for pi, e in f.factors:
        if e % 2:
            rep = rep * pi.value
    return SquareClass(rep)


def square_divisors(z: QInt) -> list[QInt]:
    """All canonical d with d^2 dividing z."""
    f = factor(z)
    choices = [[pi.value**k for k in range(e // 2 + 1)] for pi, e in f.factors]
    out = set()
    for combo in product(*choices):
        d = QInt(1, 0, z.tag)
        for c in combo:
            d = d * c
        out.add(canonical(d))
    return sorted(out, key=QInt.sort_key)


def all_divisors(z: QInt) -> list[QInt]:
    """Every divisor of z, all associates included."""
    f = factor(z)
    choices = [[pi.value**k for k in range(e + 1)] for pi, e in f.factors]
    out = []
    for combo in product(*choices):
        d = QInt(1, 0, z.tag)
        for c in combo:
            d = d * c
        out.extend(u * d for u in units(z.tag))
    return out


def nth_root(z: QInt, n: int) -> QInt | None:
    """An n-th root of z in the ring, or None."""
    if z.is_zero():
        return z
    f = factor(z)
    if any(e % n for _, e in f.factors):
        return None
    order = z.tag.unit_count
    k = unit_index(f.unit)
    # solve n*j = k (mod order) in the cyclic unit group
    for j in range(order):
        if (n * j - k) % order == 0:
            break
    else:
        return None
    root = units(z.tag)[j]
    for pi, e in f.factors:
        root = root * pi.value ** (e // n)
    assert root**n == z
    return root


def is_square(z: QInt) -> QInt | None:
    return nth_root(z, 2)
