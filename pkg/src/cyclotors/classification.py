"""Admissible torsion groups over Q(i) and Q(sqrt(-3)).

Groups are labelled by invariant factors (n1, n2) with n1 | n2, so Z_m is
(1, m) and Z_2 + Z_10 is (2, 10).  Each admissibility verdict carries a
rationale tag naming the result that admits or excludes the group.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .curves import Curve
from .fields import QRat, is_square
from .rings import QInt, RingTag


@dataclass(frozen=True, order=True)
class GroupLabel:
    n1: int
    n2: int

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1 or self.n2 % self.n1:
            raise ValueError(f"({self.n1},{self.n2}) is not canonical: need n1 | n2")

    @classmethod
    def parse(cls, text: str) -> "GroupLabel":
        m = re.fullmatch(r"\s*Z(\d+)\s*(?:[+⊕]\s*Z(\d+))?\s*", text)
        if not m:
            raise ValueError(f"bad group label {text!r} (expected e.g. Z13 or Z2+Z10)")
        if m.group(2) is None:
            return cls(1, int(m.group(1)))
        return cls(int(m.group(1)), int(m.group(2)))

    @property
    def order(self) -> int:
        return self.n1 * self.n2

    def __str__(self):
        return f"Z{self.n2}" if self.n1 == 1 else f"Z{self.n1}+Z{self.n2}"


class ListName(enum.Enum):
    MAZUR = "MAZUR"
    KKM_QUADRATIC = "KKM_QUADRATIC"
    THM1_RATIONAL_QI = "THM1_RATIONAL_QI"
    THM1_ANY_QI = "THM1_ANY_QI"
    THM2_RATIONAL_QW3 = "THM2_RATIONAL_QW3"
    THM2_ANY_QW3 = "THM2_ANY_QW3"


@dataclass(frozen=True)
class TheoremList:
    name: ListName
    groups: frozenset[GroupLabel]

    def __contains__(self, label: GroupLabel) -> bool:
        return label in self.groups

    def __len__(self):
        return len(self.groups)

    def sorted(self) -> list[GroupLabel]:
        return sorted(self.groups, key=lambda g: (g.n1, g.n2))


def _labels(pairs) -> frozenset[GroupLabel]:
    return frozenset(GroupLabel(a, b) for a, b in pairs)


MAZUR = _labels([(1, m) for m in range(1, 11)] + [(1, 12)] + [(2, 2 * m) for m in range(1, 5)])
KKM_QUADRATIC = _labels(
    [(1, m) for m in range(1, 19) if m != 17]
    + [(2, 2 * m) for m in range(1, 7)]
    + [(3, 3), (3, 6), (4, 4)]
)

TABLES = {
    ListName.MAZUR: TheoremList(ListName.MAZUR, MAZUR),
    ListName.KKM_QUADRATIC: TheoremList(ListName.KKM_QUADRATIC, KKM_QUADRATIC),
    ListName.THM1_RATIONAL_QI: TheoremList(ListName.THM1_RATIONAL_QI, MAZUR | _labels([(4, 4)])),
    ListName.THM1_ANY_QI: TheoremList(ListName.THM1_ANY_QI, MAZUR | _labels([(4, 4), (1, 13)])),
    ListName.THM2_RATIONAL_QW3: TheoremList(
        ListName.THM2_RATIONAL_QW3, MAZUR | _labels([(3, 3), (3, 6)])
    ),
    ListName.THM2_ANY_QW3: TheoremList(
        ListName.THM2_ANY_QW3, MAZUR | _labels([(3, 3), (3, 6), (1, 13), (1, 18)])
    ),
}


def admissible_groups(field: RingTag, rational_coeffs: bool) -> TheoremList:
    if field is RingTag.GAUSSIAN:
        name = ListName.THM1_RATIONAL_QI if rational_coeffs else ListName.THM1_ANY_QI
    else:
        name = ListName.THM2_RATIONAL_QW3 if rational_coeffs else ListName.THM2_ANY_QW3
    return TABLES[name]


class Rationale(enum.Enum):
    MAZUR = "MAZUR"
    KKM = "KKM"
    LEMMA3 = "LEMMA3"
    LEMMA4 = "LEMMA4"
    LEMMA6 = "LEMMA6"
    LEMMA7 = "LEMMA7"
    LEMMA8 = "LEMMA8"
    LEMMA9 = "LEMMA9"
    LEMMA10 = "LEMMA10"
    LEMMA11 = "LEMMA11"
    LEMMA12 = "LEMMA12"
    LEMMA13 = "LEMMA13"
    UNRESOLVED = "UNRESOLVED"


# Field-specific exclusions of groups on the quadratic list beyond Mazur's.
_EXCLUDED = {
    RingTag.GAUSSIAN: {
        (1, 11): Rationale.LEMMA4,
        (1, 18): Rationale.LEMMA4,
        (2, 10): Rationale.LEMMA4,
        (1, 16): Rationale.LEMMA6,
        (1, 15): Rationale.LEMMA7,
        (2, 12): Rationale.LEMMA8,
        (1, 14): Rationale.LEMMA9,
        (3, 3): Rationale.KKM,
        (3, 6): Rationale.KKM,
    },
    RingTag.OMEGA: {
        (1, 14): Rationale.LEMMA12,
        (1, 15): Rationale.LEMMA12,
        (2, 12): Rationale.LEMMA12,
        (1, 11): Rationale.LEMMA10,
        (2, 10): Rationale.LEMMA11,
        (1, 16): Rationale.LEMMA13,
        (4, 4): Rationale.KKM,
    },
}
_OPEN = {RingTag.GAUSSIAN: {(1, 13)}, RingTag.OMEGA: {(1, 13), (1, 18)}}


@dataclass(frozen=True)
class Verdict:
    admissible: bool
    rationale: Rationale

    def __bool__(self):
        return self.admissible


def is_admissible(label: GroupLabel, field: RingTag, rational_coeffs: bool = False) -> Verdict:
    """Whether ``label`` may occur as a torsion group over ``field``.

    Groups the theorems neither exclude nor realize are reported admissible
    with rationale UNRESOLVED.
    """
    key = (label.n1, label.n2)
    if label in MAZUR:
        return Verdict(True, Rationale.MAZUR)
    if label not in KKM_QUADRATIC:
        return Verdict(False, Rationale.KKM)
    if key in _EXCLUDED[field]:
        return Verdict(False, _EXCLUDED[field][key])
    if key in _OPEN[field]:
        if rational_coeffs:
            # the rational-coefficient lists omit both; for Z18 the lemma itself is silent
            return Verdict(False, Rationale.LEMMA3)
        return Verdict(True, Rationale.UNRESOLVED)
    # (4,4) over Q(i), (3,3) and (3,6) over Q(sqrt(-3))
    return Verdict(True, Rationale.KKM)


def z4z4_curve(m: QInt, n: QInt) -> Curve | None:
    """y^2 = x(x + m^2)(x + n^2) over Q(i) when m^2 - n^2 is a square."""
    if m.tag is not RingTag.GAUSSIAN or n.tag is not RingTag.GAUSSIAN:
        raise ValueError("the Z4+Z4 family lives over Q(i)")
    m2, n2 = m * m, n * n
    if m.is_zero() or n.is_zero() or m2 == n2:
        raise ValueError(f"singular parameters m={m}, n={n}")
    if is_square(QRat(m2 - n2)) is None:
        return None
    return Curve(0, m2 + n2, 0, m2 * n2, 0, RingTag.GAUSSIAN)


def report_tables() -> dict:
    """All lists as plain data, keyed by list name."""
    return {name.value: [str(g) for g in table.sorted()] for name, table in TABLES.items()}
