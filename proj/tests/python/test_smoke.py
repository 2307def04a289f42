import json
from fractions import Fraction
from math import comb

import pytest

import knotforge as kf

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"


def test_parse_round_trip():
    assert kf.parse_gauss("O5+ U9+ O7+ U5+ O9+ U7+") == TREFOIL
    with pytest.raises(kf.ParseError):
        kf.parse_gauss("O1+ X2+")
    with pytest.raises(ValueError):
        kf.parse_gauss("O1+ O1+")


def test_trefoil_diagram():
    d = kf.KnotDiagram(TREFOIL)
    assert d.crossing_count == 3
    assert d.face_count == 5
    assert d.is_flat() and d.is_alternating() and d.is_reduced()
    assert d.seifert_circle_count() == 2
    assert d.canonical_genus() == 1
    assert kf.are_isomorphic(d.phi_dual(), d.seifert_graph())
    assert d.seifert_tait_check()
    info = d.analyze()
    assert info["g"] == "1"


def test_non_realizable():
    with pytest.raises(kf.NonRealizable):
        kf.KnotDiagram("O1+ U2+ U1+ O2+")


def test_words():
    word = kf.KnotDiagram(TREFOIL).word()
    assert kf.is_wicks(word)[0]
    assert kf.is_wicks("a a^-1")[:2] == (False, 2)
    s = kf.word_surface(word)
    assert (s["v"], s["e"], s["genus"]) == (2, 3, 1)
    once = kf.t2_apply(word, 0)
    assert kf.word_surface(once)["genus"] == 1
    assert kf.t2_reduce(kf.t2_apply(once, 0)) == kf.canonical_word(word)
    assert len(kf.equivalence_classes(word)) == 3


def test_graphs():
    theta = kf.named_graph("theta")
    assert theta.face_count() == 3
    assert kf.dual(theta).vertex_count == 3
    assert kf.medial(theta).vertex_count == 3
    assert kf.is_three_connected(kf.named_graph("k4").graph)
    assert kf.find_bieulerian(kf.named_graph("k4").graph) is None
    back = kf.PlaneGraph.from_json(theta.to_json())
    assert json.loads(back.to_json()) == json.loads(theta.to_json())
    assert len(kf.enumerate_trivalent_planar(6)) == 23


def test_synthesis():
    d = kf.synthesize(kf.named_graph("theta"))
    assert d.code == "O1- U2- O3- U1- O2- U3-"
    assert kf.graph_to_link(kf.named_graph("theta"), "ac").crossing_count == 3
    with pytest.raises(kf.MultiComponent):
        kf.graph_to_link(kf.named_graph("theta"), "aa")
    with pytest.raises(ValueError):
        kf.graph_to_link(kf.named_graph("theta"), "ax")


def test_counting():
    assert kf.series_count(10, 9) == comb(18, 8) == 43758
    assert kf.series_count(200, 9) == comb(208, 8)
    assert kf.strict_series_count(4, 3, 3) == 3
    assert kf.dominance_lower_bound(4, 2, 1) == Fraction(3, 2)
    assert kf.dominance_lower_bound(792, 2, 1) == 100
    with pytest.raises(ValueError):
        kf.dominance_lower_bound(4, 1, 1)


def test_census():
    records = kf.census(6)
    assert any(r["genus"] == 2 and r["classes"] == 9 for r in records)
    theta = [r for r in records if r["v"] == 2 and r["three_connected"]]
    assert theta and theta[0]["crossings"] == 3
    assert len(kf.t2_expand_series("a b^-1 c a^-1 b c^-1", 5)) == 3
