import json
import random

import pytest
import sympy

from cyclotors.curves import INFINITY
from cyclotors.fields import QRat, is_square
from cyclotors.rings import QInt, RingTag
from cyclotors.verification import (
    L8_QUARTIC,
    L8_WEIERSTRASS,
    DegenerateParameterError,
    bounded_search,
    catalog_by_id,
    descent_cases_qi,
    descent_cases_qw3,
    descent_invariant_sample,
    enumerate_descent_triples_qw3,
    field_elements,
    model_catalog,
    reproduce_all,
    verify_descent_torsion,
    verify_lemma,
)

G, W = RingTag.GAUSSIAN, RingTag.OMEGA

DISPLAYED = {
    "L6": "t*(t**4-1)*(t**2+2*t-1)*(t**2-2*t-1)",
    "L7": "t*(t+1)*(t**2+t+1)*(t**4+3*t**3+4*t**2+2*t+1)*(t**4-7*t**3-6*t**2+2*t+1)",
    "L8": "t*(t-1)*(2*t-1)*(2*t**2-2*t+1)*(3*t**2-3*t-1)*(6*t**2-6*t+1)",
    "L9": "t*(t**2-1)*(t**3-9*t**2-t+1)*(t**3-2*t**2-t+1)",
    "L10": "t*(t-1)*(t**5-18*t**4+35*t**3-16*t**2-2*t+1)",
    "L11": "t*(t**2-1)*(t**2-4*t-1)*(t**2+t-1)",
    "L13": "t*(t**4-1)*(t**2+2*t-1)*(t**2-2*t-1)",
    "he1": "t*(t-1)*(t**3-4*t**2+t+1)",
    "he2": "t*(t+1)*(t**2+t+1)*(t**3-3*t-1)",
}

RHS = {
    "L6": "t*(t**2+1)*(t**2+2*t-1)",
    "L8": "(2*t**2-2*t+1)*(6*t**2-6*t+1)",
    "he1": "t**6-2*t**5+t**4-2*t**3+6*t**2-4*t+1",
    "he2": "t**6+2*t**5+5*t**4+10*t**3+10*t**2+4*t+1",
}

t = sympy.Symbol("t")


def coeffs(text):
    return tuple(int(c) for c in sympy.Poly(sympy.sympify(text), t).all_coeffs())


def test_catalog_shape():
    ids = [m.id for m in model_catalog()]
    assert ids == ["L6", "L6-aux", "L7", "L8", "L9", "L10", "L11", "L13", "he1", "he2"]
    models = catalog_by_id()
    assert models["L10"].field is W and models["he1"].fields == (G, W)
    assert [m.id for m in model_catalog() if m.search_only] == ["he1", "he2"]


@pytest.mark.parametrize("model_id", sorted(DISPLAYED))
def test_degeneracy_polynomials_match_display(model_id):
    assert catalog_by_id()[model_id].degeneracy.expanded() == coeffs(DISPLAYED[model_id])


@pytest.mark.parametrize("model_id", sorted(RHS))
def test_model_right_hand_sides(model_id):
    assert catalog_by_id()[model_id].rhs == coeffs(RHS[model_id])


def test_degeneracy_display_string():
    assert str(catalog_by_id()["L8"].degeneracy) == "t(t-1)(2t-1)(2t^2-2t+1)(3t^2-3t-1)(6t^2-6t+1)"
    assert str(catalog_by_id()["L10"].degeneracy) == "t(t-1)(t^5-18t^4+35t^3-16t^2-2t+1)"


def test_quartic_map_round_trip():
    J = L8_QUARTIC.jacobian()
    for num, den in [(1, 1), (2, 1), (3, 2), (-1, 3), (5, 7)]:
        u = QRat(num, den, G)
        v2 = L8_QUARTIC.value(u)
        v = is_square(v2)
        if v is None:
            continue
        P = L8_QUARTIC.to_curve(u, v)
        assert P.is_infinity or J.contains(P)
        assert L8_QUARTIC.preimage(P) == (u, v)
    assert L8_QUARTIC.to_curve(QRat(0, 1, G), QRat(1, 1, G)) == INFINITY


def _t_set(record):
    return set(record.computed["t_values"])


@pytest.mark.parametrize("model_id", ["L7", "L8", "L9", "L10", "L11", "L13"])
def test_lemmas_pass(model_id):
    r = verify_lemma(model_id)
    assert r.verdict == "PASS", r.checks
    assert r.assumptions


def test_l8_details():
    r = verify_lemma("L8")
    assert _t_set(r) == {"0", "1", "1/2", "(1+i)/2", "(1-i)/2"}
    info = r.computed["curves"][0]
    assert info["group"] == "Z8" and info["all_degenerate"]
    assert L8_WEIERSTRASS.point(QInt(0, 1, G), 1) is not None


def test_descent_curve_torsion_mismatch_is_reported():
    # y^2 = x^3 - x has Z2+Z4 over Q(i), so the stated Z2+Z2 cannot be confirmed
    r = verify_lemma("L6-aux")
    groups = [c["group"] for c in r.computed["curves"]]
    assert groups == ["Z2+Z4", "Z2+Z2", "Z2+Z2", "Z2+Z2"]
    assert r.verdict == "FAIL"
    # the conclusion drawn from the torsion still holds: every t is a root of t(t^4 - 1)
    assert all(c["all_degenerate"] for c in r.computed["curves"])
    assert _t_set(r) == {"0", "1", "-1", "i", "-i"}


def test_l6_combines_descent_and_searches():
    assert verify_lemma("L6").verdict == "PASS"
    with pytest.raises(ValueError):
        verify_lemma("he1")
    with pytest.raises(KeyError):
        verify_lemma("L99")


def test_descent_table_qw3():
    cases = descent_cases_qw3()
    assert len(cases) == 8
    assert all(c.gamma_matches() for c in cases)
    assert all(c.rank_zero_side() is not None for c in cases)
    triples = {(c.alpha, c.beta, c.gamma) for c in cases}
    assert triples == set(enumerate_descent_triples_qw3())
    names = {c.E1.curve.ainvs for c in cases} | {c.E2.curve.ainvs for c in cases}
    tors = {nc.curve.ainvs for nc in catalog_by_id()["L13"].curves}
    assert tors <= names


def test_descent_cases_qi():
    cases = descent_cases_qi()
    assert len(cases) == 8
    assert all(c.gamma_matches() for c in cases)
    aux = {nc.curve.ainvs for nc in catalog_by_id()["L6-aux"].curves}
    assert {c.E1.curve.ainvs for c in cases} == aux
    assert all(c.reference.startswith("HILBERT") for c in cases if c.beta.is_trivial())


def test_descent_torsion_report():
    rep = verify_descent_torsion()
    assert rep.record("L13").passed
    assert not rep.record("L6-aux").passed
    assert not rep.passed


def test_descent_invariant_examples():
    s = descent_invariant_sample(QRat(2, 1, G))
    assert s.alpha.rep == QInt(0, 1, G)
    assert s.passed
    with pytest.raises(DegenerateParameterError):
        descent_invariant_sample(QRat(QInt(0, 1, G)))
    with pytest.raises(DegenerateParameterError):
        descent_invariant_sample(QRat(0, 1, W))


def test_descent_invariants_on_random_parameters():
    rng = random.Random(7)
    for tag in (G, W):
        pool = [x for x in field_elements(50, tag) if not x.is_zero()]
        for x in rng.sample(pool, 30):
            try:
                s = descent_invariant_sample(x)
            except DegenerateParameterError:
                continue
            assert s.passed, (x, s.verdicts)


def test_search_order_and_hits():
    xs = field_elements(5, G)
    keys = [(x.height(), x.num.a, x.num.b, x.den) for x in xs]
    assert keys == sorted(keys) and len(set(xs)) == len(xs)
    res = bounded_search("he2", 20, W)
    zero = [h for h in res.hits if h.t[0].is_zero()]
    assert zero and all(h.degenerate for h in zero)
    assert {str(h.s) for h in zero} == {"1", "-1"}
    assert not res.nondegenerate()


def test_genus_one_search_finds_torsion_points():
    # the affine torsion points of the L9 model are among the search hits
    res = bounded_search("L9", 4)
    ts = {str(h.t[0]) for h in res.hits}
    assert {"0", "1", "-1"} <= ts


def test_hilbert_search_trivial():
    res = bounded_search("HILBERT", 10)
    assert res.hits and not res.nondegenerate()


def test_report_json_schema():
    rep = reproduce_all()
    doc = json.loads(rep.to_json())
    assert doc["verdict"] == "FAIL"
    for rec in doc["records"]:
        assert set(rec) == {"id", "claim", "computed", "checks", "verdict", "assumptions"}
    assert rep.to_text() == reproduce_all().to_text()
    assert rep.to_text(timestamp=True).startswith("# generated")
