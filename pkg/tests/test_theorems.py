from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from conftest import PAW, connected_graphs
from specdl import theorems as th
from specdl.errors import DiameterError, DisconnectedGraphError, NotBipartiteError, ParameterError
from specdl.families import (
    build,
    complete,
    complete_bipartite,
    complete_split,
    connectivity_family,
    cycle,
    parse_family,
    path,
    star,
)
from specdl.graph import Graph, add_edge, delete_edge

K4 = build(complete(4))
K23 = build(complete_bipartite(2, 3))
STAR4 = build(star(4))
C5 = build(cycle(5))
C4 = build(cycle(4))


def test_edge_monotonicity_examples():
    checks = th.check_edge_monotonicity(K4, (0, 1))
    assert [c.lhs for c in checks] == pytest.approx([6, 4, 4, 0], abs=1e-9)
    assert [c.rhs for c in checks] == pytest.approx([4, 4, 4, 0], abs=1e-9)
    assert all(c.holds for c in checks)
    diamond = add_edge(C4, (0, 2))
    assert all(c.holds for c in th.check_edge_monotonicity(diamond, (0, 2)))
    assert checks[-1].equality
    with pytest.raises(DisconnectedGraphError):
        th.check_edge_monotonicity(build(path(3)), (0, 1))


@pytest.mark.parametrize("g, value", [(K23, 12.4), (STAR4, 10.0), (C5, 12.0)])
def test_dle_via_sk_identity(g, value):
    c = th.check_thm_dle_via_sk(g)
    assert c.holds and c.equality
    assert c.lhs == pytest.approx(value) and c.rhs == pytest.approx(value)


def test_dle_via_sk_requires_diameter_two():
    with pytest.raises(DiameterError):
        th.check_thm_dle_via_sk(K4)
    with pytest.raises(DiameterError):
        th.check_thm_dle_via_sk(build(path(5)))


def test_diameter_two_transform_check():
    assert th.check_diameter2_transform(C5).holds
    with pytest.raises(DiameterError):
        th.check_diameter2_transform(build(path(4)))


def test_brouwer_examples():
    c = th.check_brouwer(K4, 1)
    assert c.rhs == pytest.approx(4) and c.lhs == 7 and c.holds
    assert all(c.holds for c in th.check_brouwer_all(C5))
    with pytest.raises(ParameterError):
        th.check_brouwer(K4, 5)


def test_sandwich_examples():
    up, lo = th.check_sandwich(STAR4)
    assert up.lhs == pytest.approx(10) and up.equality and lo.holds
    up, lo = th.check_sandwich(K23)
    assert up.holds and lo.holds
    for n in range(4, 9):
        star_le = th.GraphProfile(build(star(n)))
        assert star_le.le < star_le.dle


def test_sigma_t_examples():
    c = th.check_sigma_t_relation(STAR4)
    assert (c.lhs, c.rhs) == (2, 2) and c.equality
    assert th.check_sigma_t_relation(K23).holds
    c4 = th.check_sigma_t_relation(C4)
    assert c4.rhs == 4 - c4.extras["t"] - 1 and c4.holds


def test_second_smallest_examples():
    c = th.check_second_smallest_bound(STAR4)
    assert c.lhs == 4 and c.equality and c.equality_predicted
    c = th.check_second_smallest_bound(C5)
    assert c.lhs == Fraction(15, 2) and c.holds and not c.equality and not c.equality_predicted
    c = th.check_second_smallest_bound(build(complete(6)))
    assert c.equality and c.equality_predicted


def test_wiener_lower_examples():
    c = th.check_wiener_lower_bound(STAR4)
    assert c.rhs == 10 and c.equality and c.equality_predicted
    assert th.check_wiener_lower_bound(K23).holds
    for n in range(3, 9):
        c = th.check_wiener_lower_bound(build(complete(n)))
        assert c.rhs == 2 * n - 4 and c.lhs == pytest.approx(2 * n - 2)
        assert not c.equality and not c.equality_predicted


def test_wiener_lower_equality_beyond_stated_condition():
    # sigma = n - 1 graphs can meet the bound too (the stated condition asks sigma = n - 2)
    c = th.check_wiener_lower_bound(PAW)
    assert c.equality and c.extras["sigma"] == 3 and not c.equality_predicted


def test_bipartite_examples():
    c = th.check_bipartite_bound(K23)
    assert c.rhs == Fraction(62, 5) and c.equality and c.equality_predicted
    assert not c.extras["discrepancy"]
    p4 = th.check_bipartite_bound(build(path(4)))
    assert not p4.applicable and p4.case_label.startswith("out-of-domain")
    k33 = th.check_bipartite_bound(build(complete_bipartite(3, 3)))
    assert k33.case_label == "a=b" and k33.equality and k33.rhs == 16
    with pytest.raises(NotBipartiteError):
        th.check_bipartite_bound(C5)


def test_bipartite_order_three_prediction_fails():
    c = th.check_bipartite_bound(build(path(3)))
    assert c.equality_predicted and not c.equality
    assert (c.lhs, c.rhs) == (pytest.approx(16 / 3), Fraction(14, 3))


def test_bipartite_case_boundary_follows_printed_inequality():
    # 2ab = n(b - 2): a=1, b=6, n=7 -> 12 vs 28 (case 2); a=2, b=6 -> 24 = 8 * 4 - 8 ... check generic
    for a in range(1, 8):
        for b in range(a + 1, 12):
            n = a + b
            expected = 1 if 2 * a * b >= n * (b - 2) else 2
            assert th.bipartite_case(n, a, b) == expected


def test_independence_examples():
    c = th.check_independence_bound(build(complete_split(2, 5)))
    assert c.rhs == Fraction(56, 5) and c.equality and c.equality_predicted
    for n in range(3, 8):
        k = th.check_independence_bound(build(complete(n)))
        assert k.equality and k.equality_predicted
    assert th.check_independence_bound(C5).holds


def test_independence_printed_second_case_is_flagged():
    c = th.check_independence_bound(build(complete(6)))
    assert c.extras["discrepancy"] and c.extras["printed_rhs"] > c.lhs


def test_independence_equality_outside_split_graphs():
    c = th.check_independence_bound(build(complete_bipartite(2, 5)))
    assert c.equality and not c.equality_predicted


def test_connectivity_examples():
    c = th.check_connectivity_bound(PAW)
    assert c.rhs == 8 and c.equality and c.equality_predicted
    assert c.case_label == "case 3" and c.extras["t"] == 1
    g = build(connectivity_family(6, 1, 2))
    c = th.check_connectivity_bound(g)
    assert c.equality and c.equality_predicted and c.extras["t"] == 2
    c = th.check_connectivity_bound(C5)
    assert c.holds and not c.equality and not c.equality_predicted
    k = th.check_connectivity_bound(build(complete(5)))
    assert k.holds and k.rhs == 8
    with pytest.raises(ParameterError):
        th.check_connectivity_bound(build(path(3)))


def test_connectivity_printed_form_is_half():
    c = th.check_connectivity_bound(PAW)
    assert c.extras["printed_rhs"] == 4 and c.extras["discrepancy"]
    for n, k, t in [(6, 1, 2), (7, 2, 2), (8, 1, 3), (9, 3, 1)]:
        g = build(connectivity_family(n, k, t))
        r = th.connectivity_bound_for_t(n, k, t, th.GraphProfile(g).wiener)
        assert r["printed_rhs"] * 2 == r["rhs"]


def test_floor_corollaries():
    checks = [c for c in th.check_eigenvalue_floor_corollaries(K23)
              if c.theorem_id == "floor-bipartite"]
    assert len(checks) == 4 and all(c.equality for c in checks)
    paw = th.check_eigenvalue_floor_corollaries(PAW)
    first = [c for c in paw if c.theorem_id == "floor-connectivity"][0]
    assert first.lhs == pytest.approx(7) and first.rhs == 7 and first.equality
    p4 = [c for c in th.check_eigenvalue_floor_corollaries(build(path(4)))
          if c.theorem_id == "floor-bipartite"]
    assert all(c.holds for c in p4) and not all(c.equality for c in p4)


@pytest.mark.parametrize(
    "text",
    [
        "join:complete:2|complete:2+complete:3",
        "join:complete_bipartite:1,1|complete:2+complete:2",
        "join:complete_split:1,2|complete:1+complete:1",
        "join:pineapple:5,2|s_plus:4+star:3",
    ],
)
def test_integral_families(text):
    c = th.check_integral_family(parse_family(text))
    assert c.holds, c.extras


def test_integral_family_rejects_other_shapes():
    with pytest.raises(ParameterError):
        th.check_integral_family(parse_family("complete:4"))
    with pytest.raises(ParameterError):
        th.check_integral_family(parse_family("join:path:4|complete:1+complete:1"))


def test_compare_orientation():
    c = th.compare("x", "", Fraction(3), Fraction(3))
    assert c.holds and c.equality
    c = th.compare("x", "", 1.0, 1.0 + 1e-9)
    assert c.holds and c.equality
    c = th.compare("x", "", 1.0, 1.1)
    assert not c.holds and not c.equality


def test_independence_case_matches_real_threshold():
    for n in range(3, 40):
        for t in range(1, n):
            thr = n - sympy.Rational(1, 2) - sympy.sqrt(n + sympy.Rational(1, 4))
            expected = 1 if sympy.Integer(t) < thr else 2
            assert th.independence_case(n, n - t) == expected


def test_connectivity_case_matches_real_thresholds():
    for n in range(4, 30):
        for k in range(1, n - 1):
            for t in range(1, (n - k) // 2 + 1):
                lo = sympy.Rational(n - 2 * t, 2) - sympy.Rational(n, 2 * t)
                hi = n - t - sympy.Rational(n, 2 * t)
                expected = 1 if k < lo else (2 if k < hi else 3)
                assert th.connectivity_case(n, k, t) == expected, (n, k, t)


@given(connected_graphs(min_n=3, max_n=9))
def test_check_all_holds_and_equality_implies_holds(g):
    for c in th.check_all(g):
        if c.applicable:
            assert c.holds, c.as_dict()
        if c.equality:
            assert c.holds


def test_profile_requires_connected():
    with pytest.raises(DisconnectedGraphError):
        th.GraphProfile(Graph.from_edges(3, [(0, 1)]))
