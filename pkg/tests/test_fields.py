from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclotors.fields import QRat, is_ring_integral, is_square, nth_root, squarefree_part_field
from cyclotors.rings import QInt, RingMismatchError, RingTag
from cyclotors.parsing import parse_qrat

from conftest import TAGS, qrats

G, W = RingTag.GAUSSIAN, RingTag.OMEGA


def nonzero(s):
    return s.filter(lambda x: not x.is_zero())


def test_reduction_and_sign():
    x = QRat(QInt(2, 4, G), 6)
    assert (x.num, x.den) == (QInt(1, 2, G), 3)
    assert QRat(QInt(2, 0, G), -4) == QRat(QInt(-1, 0, G), 2)
    # the denominator only shares nothing with the content of the numerator
    y = QRat(QInt(1, 1, G), 2)
    assert y.den == 2


def test_formatting():
    assert str(QRat(QInt(1, 1, G), 2)) == "(1+i)/2"
    assert str(QRat(1, 2, G)) == "1/2"
    assert str(QRat(QInt(0, -1, G), 2)) == "-i/2"
    assert str(QRat(QInt(3, -2, W))) == "3-2*w"


@given(TAGS.flatmap(lambda t: st.tuples(qrats(t), qrats(t), qrats(t))))
def test_field_axioms(xyz):
    x, y, z = xyz
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert x - y + y == x
    if not y.is_zero():
        assert (x / y) * y == x
        assert y * y.inv() == 1


@given(TAGS.flatmap(lambda t: nonzero(qrats(t))))
def test_inverse_and_norm(x):
    assert x.norm() * x.inv().norm() == 1
    assert x.norm() == Fraction(x.num.norm(), x.den**2)
    assert (x * x.conj()).num.b == 0


@given(TAGS.flatmap(lambda t: nonzero(qrats(t))))
def test_square_roots(x):
    r = is_square(x * x)
    assert r is not None and r * r == x * x
    c = nth_root(x**3, 3)
    assert c is not None and c**3 == x**3


@given(TAGS.flatmap(lambda t: st.tuples(nonzero(qrats(t)), nonzero(qrats(t, 10, 5)))))
def test_field_square_class_invariance(xs):
    x, s = xs
    assert squarefree_part_field(x * s * s) == squarefree_part_field(x)
    rep = squarefree_part_field(x).rep
    assert is_square(x * QRat(rep)) is not None


def test_square_class_of_two_in_q_i():
    # 2 = -i (1+i)^2, so 2 is i times a square, not i(1+i)
    assert squarefree_part_field(QRat(2, 1, G)).rep == QInt(0, 1, G)
    assert squarefree_part_field(QRat(1, 2, G)).rep == QInt(0, 1, G)
    assert squarefree_part_field(QRat(QInt(1, 1, G))).rep == QInt(1, 1, G)


def test_height():
    assert QRat(QInt(1, 1, G), 2).height() == 4
    assert QRat(QInt(3, 4, G), 1).height() == 25


def test_integrality_and_coercion():
    assert is_ring_integral(QRat(QInt(2, 2, G), 2)) == QInt(1, 1, G)
    assert is_ring_integral(QRat(1, 2, G)) is None
    assert QRat.of(Fraction(3, 6), W) == QRat(1, 2, W)
    assert QRat.of(QInt(1, 1, W), W) + 1 == QRat(QInt(2, 1, W))
    with pytest.raises(RingMismatchError):
        QRat(1, 1, G) + QRat(1, 1, W)
    with pytest.raises(ZeroDivisionError):
        QRat(0, 1, G).inv()


@given(TAGS.flatmap(lambda t: qrats(t)))
def test_string_round_trip(x):
    assert parse_qrat(str(x), x.tag) == x
