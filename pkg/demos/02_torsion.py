"""
Torsion by the extended Lutz-Nagell theorem
===========================================

On an integral short model y^2 = x^3 + Ax + B a torsion point has integral
coordinates with y = 0 or y^2 dividing 4A^3 + 27B^2.  Enumerating those
candidates and keeping the points of finite order gives the whole torsion.
"""

from cyclotors import Curve, torsion_subgroup
from cyclotors.curves import mul
from cyclotors.rings import QInt, RingTag

G, W = RingTag.GAUSSIAN, RingTag.OMEGA

for text, tag in [
    ("y^2 = x^3 - x^2 + x", G),
    ("y^2 + x*y + y = x^3 - x", G),
    ("y^2 - y = x^3 - x^2", W),
    ("y^2 + y = x^3", W),
    ("y^2 = x(x + 25)(x + 16)", G),
]:
    T = torsion_subgroup(Curve.parse(text, tag))
    print(f"{text:28s} over {tag.value:4s} {T.label:7s} {', '.join(map(str, T.points))}")

# y^2 = x^3 - x gains points of order 4 over Q(i): (i, 1-i) doubles to (0, 0)
E = Curve.parse("y^2 = x^3 - x", G)
P = E.point(QInt(0, 1, G), QInt(1, -1, G))
print("2*(i,1-i) =", mul(E, 2, P), "  torsion:", torsion_subgroup(E).label)
