import pytest

from tribrackets import catalog
from tribrackets.bracket import make_cocycle, make_kauffman
from tribrackets.construct import braid_closure
from tribrackets.diagram import build_diagram, parse_pd, reverse_component
from tribrackets.invariant import (
    InvariantPolynomial,
    beta,
    counting_invariant,
    enumerate_colorings,
    phi,
    phi_multiset,
    phi_orientations,
)
from tribrackets.library import (
    bracket_beta1,
    bracket_beta2,
    bracket_z7,
    tribracket_x2,
    tribracket_x3,
)
from tribrackets.rings import ModulusRing

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def test_counting_examples():
    x3 = tribracket_x3()
    assert counting_invariant(build_diagram(parse_pd("U(1)")), x3) == 9
    assert counting_invariant(build_diagram(parse_pd(TREFOIL)), x3) == 27
    assert counting_invariant(build_diagram(parse_pd("U(2)")), x3) == 27
    x2 = tribracket_x2()
    assert counting_invariant(build_diagram(braid_closure([1, 1], 2)), x2) == 8


def test_unknot_presentations_all_give_n_squared():
    for x in (tribracket_x2(), tribracket_x3()):
        n = x.size
        for text in ("U(1)", "X(1,1,2,2)", "X(2,1,1,2)"):
            assert counting_invariant(build_diagram(parse_pd(text)), x) == n * n


def test_colorings_satisfy_constraints():
    x3 = tribracket_x3()
    d = build_diagram(parse_pd(TREFOIL))
    for coloring in enumerate_colorings(d, x3):
        for ci in range(3):
            a, b, c, dd = coloring.role_colors(ci)
            assert x3.eval(a, b, c) == dd


def test_coloring_order_is_deterministic():
    d = build_diagram(parse_pd(TREFOIL))
    x3 = tribracket_x3()
    once = [c.assignment for c in enumerate_colorings(d, x3)]
    again = [c.assignment for c in enumerate_colorings(d, x3)]
    assert once == again == sorted(once)


def test_beta_zero_crossing_unknot_is_delta():
    d = build_diagram(parse_pd("U(1)"))
    for bracket in (bracket_z7(), bracket_beta1(), bracket_beta2()):
        for coloring in enumerate_colorings(d, bracket.tribracket):
            assert beta(coloring, bracket) == bracket.delta


def test_hopf_displayed_coloring_and_multiset():
    bracket = bracket_z7()
    d = build_diagram(braid_closure([1, 1], 2))
    colorings = enumerate_colorings(d, bracket.tribracket)
    assert len(colorings) == 8
    values = sorted(beta(c, bracket).value for c in colorings)
    assert values == [1, 1, 1, 1, 6, 6, 6, 6]
    displayed = [
        c for c in colorings
        if sorted((c.role_colors(0)[:3], c.role_colors(1)[:3]))
        == [(1, 1, 2), (1, 2, 1)]
    ]
    assert displayed and all(beta(c, bracket).value == 6 for c in displayed)


def test_phi_and_multiset_agree():
    bracket = bracket_z7()
    d = build_diagram(braid_closure([1, 1], 2))
    poly = phi(d, bracket)
    assert poly.canonical_string() == "4u^6+4u"
    multiset = phi_multiset(d, bracket)
    assert sorted(v.value for v in multiset) == [1, 1, 1, 1, 6, 6, 6, 6]
    assert poly.coefficient_sum() == len(multiset)


def test_unknot_phi_with_z7():
    d = build_diagram(parse_pd("U(1)"))
    assert phi(d, bracket_z7()).canonical_string() == "4u^6"


def test_coefficient_sum_equals_counting_for_catalog_sample():
    for name in ("3_1", "4_1", "L2a1", "L6a4", "8_19"):
        pd = catalog.get(name).pd
        d = build_diagram(pd)
        for bracket in (bracket_beta1(), bracket_z7()):
            assert phi(d, bracket).coefficient_sum() == counting_invariant(
                d, bracket.tribracket
            )


def test_cocycle_reduction_collapses_phi():
    x2 = tribracket_x2()
    bracket, report = make_cocycle(x2, lambda a, b, c: 1, 7)
    assert report.valid
    for name in ("3_1", "4_1", "L2a1"):
        d = build_diagram(catalog.get(name).pd)
        poly = phi(d, bracket)
        assert len(poly.terms) == 1
        assert poly.coefficient_sum() == counting_invariant(d, x2)


def test_orientation_reversal_preserves_counting():
    x2 = tribracket_x2()
    for name in ("L2a1", "L5a1", "L6a4"):
        pd = catalog.get(name).pd
        d = build_diagram(pd)
        base = counting_invariant(d, x2)
        cur = pd
        for i in range(len(d.components)):
            cur = reverse_component(cur, i)
        assert counting_invariant(build_diagram(cur), x2) == base


def test_kauffman_reduction_against_oracle():
    from oracles import kauffman_value

    for name in ("0_1", "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"):
        pd = catalog.get(name).pd
        d = build_diagram(pd)
        for a in (2, 3, 4):
            bracket = make_kauffman(7, a)
            poly = phi(d, bracket)
            assert poly.coefficient_sum() == 1
            (exponent,) = poly.terms
            assert exponent == kauffman_value(pd, a, 7), (name, a)


def test_polynomial_rendering():
    ring = ModulusRing(7)
    poly = InvariantPolynomial(ring, {6: 4, 1: 4})
    assert poly.canonical_string() == "4u^6+4u"
    assert InvariantPolynomial(ring, {0: 3, 2: 1}).canonical_string() == "u^2+3"
    assert InvariantPolynomial(ring, {}).canonical_string() == "0"
    parsed = InvariantPolynomial.from_string("4u^6+4u", ring)
    assert parsed == poly
    assert InvariantPolynomial.from_string("16u^3", ModulusRing(5)).terms == {3: 16}
    assert InvariantPolynomial.from_string("u+u^4+2u^2", ModulusRing(5)).terms == {
        1: 1, 4: 1, 2: 2,
    }
    assert poly.to_json() == '{"modulus": 7, "terms": {"1": 4, "6": 4}}'
    with pytest.raises(ValueError):
        InvariantPolynomial.from_string("u^2+bogus", ring)


def test_phi_loop_orders_agree():
    for name in ("3_1", "L2a1", "L6a4"):
        d = build_diagram(catalog.get(name).pd)
        for bracket in (bracket_z7(), bracket_beta1()):
            assert phi(d, bracket) == phi(d, bracket, states_outer=True)


def test_phi_orientations_masks():
    pd = catalog.get("L2a1").pd
    values = phi_orientations(pd, bracket_z7())
    assert set(values) == {0, 1, 2, 3}
    target = InvariantPolynomial.from_string("4u^6+4u", ModulusRing(7))
    assert target in values.values()


def test_beta_palette_check():
    d = build_diagram(parse_pd(TREFOIL))
    x3 = tribracket_x3()
    coloring = enumerate_colorings(d, x3)[-1]
    with pytest.raises(ValueError):
        beta(coloring, bracket_z7())  # 2-element bracket vs 3-element coloring
