"""Torsion subgroups of elliptic curves over Q(i) and Q(sqrt(-3))."""

from .classification import GroupLabel, admissible_groups, is_admissible, z4z4_curve
from .curves import Curve, Point, torsion_subgroup
from .fields import QRat
from .rings import QInt, RingTag, factor, squarefree_part
from .verification import bounded_search, reproduce_all, verify_lemma

__all__ = [
    "Curve",
    "GroupLabel",
    "Point",
    "QInt",
    "QRat",
    "RingTag",
    "admissible_groups",
    "bounded_search",
    "factor",
    "is_admissible",
    "reproduce_all",
    "squarefree_part",
    "torsion_subgroup",
    "verify_lemma",
    "z4z4_curve",
]
