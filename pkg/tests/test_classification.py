import pytest

from cyclotors.classification import (
    KKM_QUADRATIC,
    MAZUR,
    GroupLabel,
    ListName,
    Rationale,
    admissible_groups,
    is_admissible,
    report_tables,
    z4z4_curve,
)
from cyclotors.curves import SingularCurveError, torsion_subgroup
from cyclotors.rings import QInt, RingTag

G, W = RingTag.GAUSSIAN, RingTag.OMEGA


def L(text):
    return GroupLabel.parse(text)


def test_labels():
    assert L("Z13") == GroupLabel(1, 13)
    assert L("Z2+Z10") == GroupLabel(2, 10)
    assert L("Z2⊕Z10") == GroupLabel(2, 10)
    assert str(GroupLabel(4, 4)) == "Z4+Z4"
    with pytest.raises(ValueError):
        GroupLabel(3, 4)
    with pytest.raises(ValueError):
        L("Z2xZ4")


def test_list_sizes():
    assert len(MAZUR) == 15
    assert len(KKM_QUADRATIC) == 26
    assert MAZUR < KKM_QUADRATIC
    assert GroupLabel(1, 17) not in KKM_QUADRATIC
    assert {L("Z15"), L("Z16"), L("Z18"), L("Z3+Z6"), L("Z4+Z4"), L("Z2+Z12")} <= KKM_QUADRATIC


def test_theorem_lists():
    assert set(admissible_groups(G, True).groups) == MAZUR | {L("Z4+Z4")}
    assert set(admissible_groups(G, False).groups) == MAZUR | {L("Z4+Z4"), L("Z13")}
    assert set(admissible_groups(W, True).groups) == MAZUR | {L("Z3+Z3"), L("Z3+Z6")}
    assert set(admissible_groups(W, False).groups) == MAZUR | {L("Z3+Z3"), L("Z3+Z6"), L("Z13"), L("Z18")}
    assert admissible_groups(W, False).name is ListName.THM2_ANY_QW3
    assert len(report_tables()["KKM_QUADRATIC"]) == 26


@pytest.mark.parametrize(
    "label,field,admissible,rationale",
    [
        ("Z16", G, False, Rationale.LEMMA6),
        ("Z2+Z10", G, False, Rationale.LEMMA4),
        ("Z11", W, False, Rationale.LEMMA10),
        ("Z2+Z10", W, False, Rationale.LEMMA11),
        ("Z16", W, False, Rationale.LEMMA13),
        ("Z15", G, False, Rationale.LEMMA7),
        ("Z2+Z12", G, False, Rationale.LEMMA8),
        ("Z14", G, False, Rationale.LEMMA9),
        ("Z13", G, True, Rationale.UNRESOLVED),
        ("Z18", W, True, Rationale.UNRESOLVED),
        ("Z7", G, True, Rationale.MAZUR),
        ("Z4+Z4", G, True, Rationale.KKM),
        ("Z4+Z4", W, False, Rationale.KKM),
        ("Z3+Z3", W, True, Rationale.KKM),
        ("Z3+Z3", G, False, Rationale.KKM),
        ("Z17", G, False, Rationale.KKM),
    ],
)
def test_is_admissible(label, field, admissible, rationale):
    v = is_admissible(L(label), field)
    assert (v.admissible, v.rationale) == (admissible, rationale)


def test_rational_coefficients_close_open_cases():
    assert is_admissible(L("Z13"), G, rational_coeffs=True) == is_admissible(L("Z13"), W, True)
    assert not is_admissible(L("Z13"), G, True)
    assert is_admissible(L("Z18"), W, True).rationale is Rationale.LEMMA3


@pytest.mark.parametrize("field", [G, W])
@pytest.mark.parametrize("rational", [False, True])
def test_verdicts_agree_with_theorem_lists(field, rational):
    table = admissible_groups(field, rational)
    for g in KKM_QUADRATIC:
        assert bool(is_admissible(g, field, rational)) == (g in table)


def test_z4z4_family():
    C = z4z4_curve(QInt(5, 0, G), QInt(4, 0, G))
    assert C is not None and torsion_subgroup(C).label == "Z4+Z4"
    assert z4z4_curve(QInt(1, 0, G), QInt(0, 1, G)) is None
    with pytest.raises(ValueError):
        z4z4_curve(QInt(1, 0, G), QInt(1, 0, G))
    with pytest.raises(ValueError):
        z4z4_curve(QInt(1, 0, W), QInt(1, 0, W))
    assert issubclass(SingularCurveError, ValueError)
