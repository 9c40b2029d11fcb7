"""Weierstrass curves over Q(i) and Q(sqrt(-3)) and their torsion.

Torsion is computed with the Lutz-Nagell theorem extended to Z[i] and Z[w]:
on a short model y^2 = x^3 + A x + B with integral A, B every torsion point
has integral coordinates and either y = 0 or y^2 divides 4A^3 + 27B^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

import mpmath
from sympy import primerange

from .fields import QRat, is_square, nth_root
from .rings import (
    QInt,
    QPrime,
    RingMismatchError,
    RingTag,
    SplitType,
    divides,
    factor,
    factor_integer,
    primes_above,
    square_divisors,
    units,
    units_mod_sign,
)

MAX_TORSION_ORDER = 18


class SingularCurveError(ValueError):
    pass


class NotOnCurveError(ValueError):
    pass


class BadReductionError(ValueError):
    pass


class TorsionStructureError(AssertionError):
    """The point set is not a group of the expected shape (an upstream bug)."""


def _q(value, tag: RingTag) -> QRat:
    return QRat.of(value, tag)


@dataclass(frozen=True, init=False)
class Curve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: QRat
    a2: QRat
    a3: QRat
    a4: QRat
    a6: QRat
    tag: RingTag

    def __init__(self, a1, a2, a3, a4, a6, tag: RingTag):
        for name, v in zip(("a1", "a2", "a3", "a4", "a6"), (a1, a2, a3, a4, a6)):
            object.__setattr__(self, name, _q(v, tag))
        object.__setattr__(self, "tag", tag)
        if self.discriminant().is_zero():
            raise SingularCurveError(f"singular model {self.ainvs_str()}")

    @classmethod
    def short(cls, A, B, tag: RingTag) -> "Curve":
        return cls(0, 0, 0, A, B, tag)

    @classmethod
    def parse(cls, text: str, tag: RingTag | None = None) -> "Curve":
        from .parsing import parse_ainvariants

        ainvs, tag = parse_ainvariants(text, tag)
        return cls(*ainvs, tag)

    @property
    def ainvs(self) -> tuple[QRat, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def is_short(self) -> bool:
        return self.a1.is_zero() and self.a2.is_zero() and self.a3.is_zero()

    @property
    def A(self) -> QRat:
        if not self.is_short:
            raise ValueError("A is only defined for short models")
        return self.a4

    @property
    def B(self) -> QRat:
        if not self.is_short:
            raise ValueError("B is only defined for short models")
        return self.a6

    @property
    def is_integral_short(self) -> bool:
        return self.is_short and self.a4.den == 1 and self.a6.den == 1

    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def c_invariants(self):
        b2, b4, b6, _ = self.b_invariants()
        return b2 * b2 - 24 * b4, -(b2**3) + 36 * b2 * b4 - 216 * b6

    def discriminant(self) -> QRat:
        b2, b4, b6, b8 = self.b_invariants()
        return -(b2 * b2) * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def short_discriminant(self) -> QRat:
        """4A^3 + 27B^2 of a short model."""
        return 4 * self.A**3 + 27 * self.B**2

    def j_invariant(self) -> QRat:
        c4, _ = self.c_invariants()
        return c4**3 / self.discriminant()

    def contains(self, P: "Point") -> bool:
        if P.is_infinity:
            return True
        x, y = P.x, P.y
        a1, a2, a3, a4, a6 = self.ainvs
        return y * y + a1 * x * y + a3 * y == x**3 + a2 * x * x + a4 * x + a6

    def point(self, x, y) -> "Point":
        P = Point(_q(x, self.tag), _q(y, self.tag))
        if not self.contains(P):
            raise NotOnCurveError(f"{P} is not on {self}")
        return P

    def ainvs_str(self) -> str:
        return "[" + ",".join(str(a) for a in self.ainvs) + "]"

    def equation(self) -> str:
        from .parsing import format_poly_terms

        a1, a2, a3, a4, a6 = self.ainvs
        one = QRat(1, 1, self.tag)
        lhs = format_poly_terms([(one, "y^2"), (a1, "x*y"), (a3, "y")])
        rhs = format_poly_terms([(one, "x^3"), (a2, "x^2"), (a4, "x"), (a6, "")])
        return f"{lhs} = {rhs}"

    def __str__(self):
        return f"{self.equation()} over {self.tag.value}"


@dataclass(frozen=True)
class Point:
    x: QRat | None = None
    y: QRat | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def sort_key(self):
        if self.is_infinity:
            return (0,)
        return (1, self.x.sort_key(), self.y.sort_key())

    def __str__(self):
        return "O" if self.is_infinity else f"({self.x},{self.y})"


INFINITY = Point()


def discriminant(E: Curve) -> QRat:
    return E.discriminant()


def _check(E: Curve, *points: Point) -> None:
    for P in points:
        if not P.is_infinity and P.x.tag is not E.tag:
            raise RingMismatchError(f"point over {P.x.tag.name}, curve over {E.tag.name}")
        if not E.contains(P):
            raise NotOnCurveError(f"{P} is not on {E}")


def neg(E: Curve, P: Point) -> Point:
    _check(E, P)
    return _neg(E, P)


def _neg(E: Curve, P: Point) -> Point:
    if P.is_infinity:
        return P
    return Point(P.x, -P.y - E.a1 * P.x - E.a3)


def add(E: Curve, P: Point, Q: Point) -> Point:
    _check(E, P, Q)
    return _add(E, P, Q)


def _add(E: Curve, P: Point, Q: Point) -> Point:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    a1, a2, a3, a4, a6 = E.ainvs
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if (y1 + y2 + a1 * x2 + a3).is_zero():
            return INFINITY
        den = 2 * y1 + a1 * x1 + a3
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
        nu = (-(x1**3) + a4 * x1 + 2 * a6 - a3 * y1) / den
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return Point(x3, y3)


def mul(E: Curve, n: int, P: Point) -> Point:
    _check(E, P)
    if n < 0:
        n, P = -n, _neg(E, P)
    result = INFINITY
    while n:
        if n & 1:
            result = _add(E, result, P)
        P = _add(E, P, P)
        n >>= 1
    return result


def order_of_point(E: Curve, P: Point, bound: int = MAX_TORSION_ORDER) -> int | None:
    """Least n <= bound with nP = O, or None.

    On an integral short model a non-integral multiple proves P has infinite
    order, so the search stops there.
    """
    _check(E, P)
    integral = E.is_integral_short
    Q = P
    for n in range(1, bound + 1):
        if Q.is_infinity:
            return n
        if integral and (Q.x.den != 1 or Q.y.den != 1):
            return None
        Q = _add(E, Q, P)
    return None


@dataclass(frozen=True)
class Isomorphism:
    """Change of coordinates x = u^2 x' + r, y = u^3 y' + s u^2 x' + t,
    taking ``source`` (x, y) to ``target`` (x', y')."""

    source: Curve
    target: Curve
    u: QRat
    r: QRat
    s: QRat
    t: QRat

    def forward(self, P: Point) -> Point:
        if P.is_infinity:
            return P
        u, r, s, t = self.u, self.r, self.s, self.t
        x = (P.x - r) / u**2
        y = (P.y - s * (P.x - r) - t) / u**3
        return Point(x, y)

    def backward(self, P: Point) -> Point:
        if P.is_infinity:
            return P
        u, r, s, t = self.u, self.r, self.s, self.t
        return Point(u**2 * P.x + r, u**3 * P.y + s * u**2 * P.x + t)

    def inverse(self) -> "Isomorphism":
        u, r, s, t = self.u, self.r, self.s, self.t
        return Isomorphism(self.target, self.source, u.inv(), -r / u**2, -s / u, (r * s - t) / u**3)

    def then(self, other: "Isomorphism") -> "Isomorphism":
        """self followed by other."""
        if other.source != self.target:
            raise ValueError("isomorphisms do not compose")
        u1, r1, s1, t1 = self.u, self.r, self.s, self.t
        u2, r2, s2, t2 = other.u, other.r, other.s, other.t
        return Isomorphism(
            self.source,
            other.target,
            u1 * u2,
            r1 + u1**2 * r2,
            s1 + u1 * s2,
            t1 + u1**2 * s1 * r2 + u1**3 * t2,
        )


def change_coordinates(E: Curve, u, r, s, t) -> Isomorphism:
    tag = E.tag
    u, r, s, t = (_q(v, tag) for v in (u, r, s, t))
    a1, a2, a3, a4, a6 = E.ainvs
    b1 = (a1 + 2 * s) / u
    b2 = (a2 - s * a1 + 3 * r - s * s) / u**2
    b3 = (a3 + r * a1 + 2 * t) / u**3
    b4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u**4
    b6 = (a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1) / u**6
    return Isomorphism(E, Curve(b1, b2, b3, b4, b6, tag), u, r, s, t)


def _least_clearing_scale(values: list[tuple[QRat, int]]) -> int:
    """Least positive integer k with k^w * v integral for every (v, w)."""
    need: dict[int, int] = {}
    for v, w in values:
        if v.den == 1:
            continue
        for p, e in factor_integer(v.den):
            need[p] = max(need.get(p, 0), -(-e // w))
    k = 1
    for p, e in need.items():
        k *= p**e
    return k


def to_short(E: Curve) -> tuple[Curve, Isomorphism]:
    """Integral short model y^2 = x^3 + A x + B and the isomorphism E -> model.

    Completes the square, depresses the cubic, then scales x by k^2 and y by
    k^3 with k the least positive integer making A and B integral.
    """
    b2 = E.b_invariants()[0]
    r = -b2 / 12
    s = -E.a1 / 2
    t = -(E.a1 * r + E.a3) / 2
    step = change_coordinates(E, 1, r, s, t)
    S = step.target
    assert S.is_short
    k = _least_clearing_scale([(S.a4, 4), (S.a6, 6)])
    iso = step.then(change_coordinates(S, QRat(1, k, E.tag), 0, 0, 0))
    assert iso.target.is_integral_short
    return iso.target, iso


def find_isomorphism(E1: Curve, E2: Curve) -> Isomorphism | None:
    """An isomorphism E1 -> E2 defined over the field, if one exists."""
    if E1.tag is not E2.tag:
        raise RingMismatchError("curves over different fields")
    S1, i1 = to_short(E1)
    S2, i2 = to_short(E2)
    A1, B1, A2, B2 = S1.A, S1.B, S2.A, S2.B
    if (A1.is_zero(), B1.is_zero()) != (A2.is_zero(), B2.is_zero()):
        return None
    # short models: A2 = A1/u^4, B2 = B1/u^6
    candidates: list[QRat] = []
    if not A1.is_zero() and not B1.is_zero():
        sq = is_square((B1 * A2) / (B2 * A1))
        if sq is not None:
            candidates = [sq, -sq]
    else:
        ratio, power = ((A1 / A2), 4) if B1.is_zero() else ((B1 / B2), 6)
        root = nth_root(ratio, power)
        if root is not None:
            candidates = [root * QRat(v) for v in units(E1.tag)]
    for u in candidates:
        if A1 / u**4 == A2 and B1 / u**6 == B2:
            mid = change_coordinates(S1, u, 0, 0, 0)
            if mid.target == S2:
                return i1.then(mid).then(i2.inverse())
    return None


def _mul_pair(tag: RingTag):
    if tag is RingTag.GAUSSIAN:
        return lambda a, b, c, d: (a * c - b * d, a * d + b * c)
    return lambda a, b, c, d: (a * c - b * d, a * d + b * c + b * d)


def solve_x(E: Curve, y: QInt, method: str = "numeric") -> list[QInt]:
    """Ring roots x of x^3 + A x + B - y^2 on an integral short model.

    ``method="divisors"`` tests every divisor of the constant term within the
    Cauchy bound.  The default locates the three complex roots to high
    precision, rounds each to the nearest ring element and keeps those that
    satisfy the cubic exactly; repeated roots fall back to divisors.
    """
    if not E.is_integral_short:
        raise ValueError("solve_x needs an integral short model")
    if method not in ("numeric", "divisors"):
        raise ValueError(f"unknown method {method!r}")
    A, B = E.A.num, E.B.num
    c = B - y * y
    if c.is_zero():
        roots = {QInt(0, 0, E.tag)}
        r = is_square(QRat(-A))
        if r is not None:
            roots.update({r.num, -r.num})
        return sorted(roots, key=QInt.sort_key)
    if not _roots_mod_small_primes(A, c):
        return []
    if method == "numeric" and not (4 * A**3 + 27 * c * c).is_zero():
        found = _numeric_roots(A, c)
        if found is not None:
            return found
    return _divisor_roots(A, c)


@lru_cache(maxsize=128)
def _root_filters(A: QInt, count: int = 12) -> tuple[tuple[int, int, frozenset], ...]:
    """(p, g, values of -(x^3 + A x) mod p) for small degree-one primes."""
    out = []
    for p in primerange(5, 1000):
        split = p % 4 == 1 if A.tag is RingTag.GAUSSIAN else p % 3 == 1
        if not split:
            continue
        # image g of the generator: g^2 = -1, resp. g^2 = g - 1
        g = next(r for r in range(p) if (r * r + 1 if A.tag is RingTag.GAUSSIAN else r * r - r + 1) % p == 0)
        a = (A.a + A.b * g) % p
        out.append((p, g, frozenset(-(x * x * x + a * x) % p for x in range(p))))
        if len(out) == count:
            break
    return tuple(out)


def _roots_mod_small_primes(A: QInt, c: QInt) -> bool:
    # a ring root reduces to a root modulo every prime
    return all((c.a + c.b * g) % p in values for p, g, values in _root_filters(A))


def _cubic_at(x: QInt, A: QInt, c: QInt) -> QInt:
    return (x * x + A) * x + c


def _to_mpc(z: QInt):
    if z.tag is RingTag.GAUSSIAN:
        return mpmath.mpc(z.a, z.b)
    return mpmath.mpc(mpmath.mpf(z.a) + mpmath.mpf(z.b) / 2, -mpmath.sqrt(3) * z.b / 2)


def _nearest(z, tag: RingTag) -> QInt:
    if tag is RingTag.GAUSSIAN:
        return QInt(int(mpmath.nint(z.real)), int(mpmath.nint(z.imag)), tag)
    b = int(mpmath.nint(-2 * z.imag / mpmath.sqrt(3)))
    return QInt(int(mpmath.nint(z.real - mpmath.mpf(b) / 2)), b, tag)


def _numeric_roots(A: QInt, c: QInt) -> list[QInt] | None:
    digits = len(str(max(A.norm(), c.norm())))
    with mpmath.workdps(digits + 30):
        try:
            zs = mpmath.polyroots([1, 0, _to_mpc(A), _to_mpc(c)], maxsteps=200, extraprec=2 * digits + 60)
        except mpmath.libmp.NoConvergence:
            return None
        candidates = {_nearest(z, A.tag) for z in zs}
    return sorted((x for x in candidates if _cubic_at(x, A, c).is_zero()), key=QInt.sort_key)


def _divisor_roots(A: QInt, c: QInt) -> list[QInt]:
    tag = A.tag
    mul2 = _mul_pair(tag)
    cauchy = (2 + isqrt(max(A.norm(), c.norm()))) ** 2
    f = factor(c)
    divisors = [(1, 0)]
    for pi, e in f.factors:
        pa, pb = pi.value.a, pi.value.b
        grown = []
        for a, b in divisors:
            for _ in range(e + 1):
                grown.append((a, b))
                a, b = mul2(a, b, pa, pb)
        divisors = grown
    norm = QInt.norm
    Aa, Ab, ca, cb = A.a, A.b, c.a, c.b
    unit_pairs = [(u.a, u.b) for u in units(tag)]
    roots: set[QInt] = set()
    for da, db in divisors:
        if norm(QInt(da, db, tag)) > cauchy:
            continue
        for ua, ub in unit_pairs:
            xa, xb = mul2(da, db, ua, ub)
            sa, sb = mul2(xa, xb, xa, xb)
            sa, sb = sa + Aa, sb + Ab
            va, vb = mul2(sa, sb, xa, xb)
            if va + ca == 0 and vb + cb == 0:
                roots.add(QInt(xa, xb, tag))
    return sorted(roots, key=QInt.sort_key)


@dataclass(frozen=True)
class TorsionData:
    points: tuple[Point, ...]
    n1: int
    n2: int
    generators: tuple[Point, ...]

    @property
    def order(self) -> int:
        return self.n1 * self.n2

    @property
    def label(self) -> str:
        return f"Z{self.n2}" if self.n1 == 1 else f"Z{self.n1}+Z{self.n2}"


def _lutz_nagell_points(S: Curve, bound: int) -> list[Point]:
    A, B = S.A.num, S.B.num
    D = 4 * A**3 + 27 * B * B
    ys = [QInt(0, 0, S.tag)]
    for d in square_divisors(D):
        ys.extend(u * d for u in units_mod_sign(S.tag))
    found = {INFINITY}
    for y in ys:
        for x in solve_x(S, y):
            P = Point(QRat(x), QRat(y))
            if order_of_point(S, P, bound) is not None:
                found.add(P)
                found.add(_neg(S, P))
    return sorted(found, key=Point.sort_key)


def torsion_subgroup(E: Curve, bound: int = MAX_TORSION_ORDER) -> TorsionData:
    S, iso = to_short(E)
    short_points = _lutz_nagell_points(S, bound)
    points = sorted((iso.backward(P) for P in short_points), key=Point.sort_key)
    n1, n2 = group_structure(points, E)
    return TorsionData(tuple(points), n1, n2, _generators(E, points, n1, n2))


def _orders(E: Curve, points: list[Point]) -> dict[Point, int]:
    return {P: order_of_point(E, P, len(points)) for P in points}


def group_structure(points, E: Curve) -> tuple[int, int]:
    """Invariant factors (n1, n2), n1 | n2, of a finite point group."""
    pts = set(points)
    if INFINITY not in pts:
        raise TorsionStructureError("identity missing")
    for P in pts:
        if _neg(E, P) not in pts:
            raise TorsionStructureError(f"not closed under negation at {P}")
        for Q in pts:
            if _add(E, P, Q) not in pts:
                raise TorsionStructureError(f"not closed: {P} + {Q}")
    orders = _orders(E, list(pts))
    n = len(pts)
    n2 = max(orders.values())
    n1, rest = divmod(n, n2)
    if rest or n2 % n1 or n1 not in (1, 2, 3, 4):
        raise TorsionStructureError(f"inconsistent structure for {n} points with exponent {n2}")
    return n1, n2


def _generators(E: Curve, points, n1: int, n2: int) -> tuple[Point, ...]:
    if n1 * n2 == 1:
        return ()
    orders = _orders(E, list(points))
    for P in points:
        if orders[P] != n2:
            continue
        if n1 == 1:
            return (P,)
        span = {mul(E, k, P) for k in range(n2)}
        for Q in points:
            if orders[Q] != n1:
                continue
            sub = {_add(E, A, mul(E, j, Q)) for A in span for j in range(n1)}
            if len(sub) == n1 * n2:
                return (P, Q)
    raise TorsionStructureError("no generators found")


# reduction modulo a prime of the ring


class _Residue:
    """The residue field of a prime: F_p for degree-one primes, F_p[g] with
    the ring's minimal polynomial for inert p."""

    def __init__(self, pi: QPrime):
        self.p = p = pi.residue_char
        self.tag = pi.tag
        self.inert = pi.split_type is SplitType.INERT
        if not self.inert:
            a, b = pi.value.a, pi.value.b
            # a + b*g = 0 mod pi, and p does not divide b for a degree-one prime
            self.g = (-a * pow(b, -1, p)) % p

    def reduce(self, z: QInt):
        p = self.p
        if self.inert:
            return (z.a % p, z.b % p)
        return (z.a + z.b * self.g) % p

    def elements(self):
        p = self.p
        if self.inert:
            return [(a, b) for a in range(p) for b in range(p)]
        return range(p)

    def size(self) -> int:
        return self.p**2 if self.inert else self.p

    # arithmetic on pairs (a, b) = a + b*g with g^2 = -1 or g^2 = g - 1
    def mul(self, x, y):
        p = self.p
        if not self.inert:
            return x * y % p
        a, b = x
        c, d = y
        if self.tag is RingTag.GAUSSIAN:
            return ((a * c - b * d) % p, (a * d + b * c) % p)
        return ((a * c - b * d) % p, (a * d + b * c + b * d) % p)

    def add(self, x, y):
        p = self.p
        if not self.inert:
            return (x + y) % p
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p)

    def is_zero(self, x) -> bool:
        return x == 0 if not self.inert else x == (0, 0)

    def power(self, x, n: int):
        if not self.inert:
            return pow(x, n, self.p)
        result, base = (1, 0), x
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def chi(self, x) -> int:
        """Quadratic character on the residue field (p odd)."""
        if self.is_zero(x):
            return 0
        q = self.size()
        r = self.power(x, (q - 1) // 2)
        one = 1 if not self.inert else (1, 0)
        return 1 if r == one else -1


def reduce_and_count(E: Curve, pi: QPrime, limit: int = 20000) -> int:
    """|E(F_q)| by brute force over the residue field of pi."""
    if not E.is_integral_short:
        raise ValueError("reduce_and_count needs an integral short model")
    if pi.tag is not E.tag:
        raise RingMismatchError("prime and curve over different rings")
    if pi.residue_size > limit:
        raise ValueError(f"residue field of size {pi.residue_size} exceeds limit {limit}")
    D = E.short_discriminant().num
    if pi.residue_char == 2 or divides(pi.value, D):
        raise BadReductionError(f"{E} has bad reduction at {pi.value}")
    F = _Residue(pi)
    A, B = F.reduce(E.A.num), F.reduce(E.B.num)
    count = 1
    for x in F.elements():
        rhs = F.add(F.add(F.power(x, 3), F.mul(A, x)), B)
        count += 1 + F.chi(rhs)
    q = F.size()
    assert (count - q - 1) ** 2 <= 4 * q, "Hasse bound violated"
    return count


def good_split_primes(E: Curve, count: int, max_size: int = 200, min_char: int = 5) -> list[QPrime]:
    """The first ``count`` degree-one primes of good reduction, by norm."""
    D = E.short_discriminant().num
    out = []
    for p in primerange(min_char, max_size + 1):
        for pi in primes_above(p, E.tag):
            if pi.split_type is SplitType.INERT or divides(pi.value, D):
                continue
            out.append(pi)
            if len(out) == count:
                return out
    return out


def hasse_interval(q: int) -> tuple[int, int]:
    r = isqrt(4 * q)
    return q + 1 - r, q + 1 + r
