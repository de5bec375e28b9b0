import pytest

import fanramsey as fr


def test_matching_and_decomposition():
    assert len(fr.max_matching(fr.petersen_graph())) == 5
    eg = fr.edmonds_gallai(fr.path_graph(3))
    assert eg["A"] == [1]
    assert eg["D"] == [[0], [2]]
    assert eg["deficiency"] == 1


def test_graph6_round_trip():
    g = fr.from_graph6("D?{")
    assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert fr.to_graph6(g) == "D?{"
    assert fr.from_edge_list(fr.to_edge_list(fr.petersen_graph())) == fr.petersen_graph()


def test_bigraphic():
    assert fr.is_bigraphic([2, 2, 2], [3, 3])["bigraphic"]
    assert not fr.is_bigraphic([3], [1, 1])["bigraphic"]
    r = fr.realize_interval(a=7, b=2, c=2, d=4, sigma=3)
    assert r["a_degrees"] == [2, 1, 1, 1, 1, 1, 1]
    assert fr.realize_bigraphic([2, 2, 2], [3, 3]).size() == 6


def test_star_fan_construction():
    c = fr.star_fan_lower(10, 5)
    assert (c["a"], c["b"], c["sigma"], c["N"]) == (7, 2, 3, 18)
    report = fr.verify_star_fan_witness(c["coloring"], 10, 5)
    assert report["all_hold"]
    assert report["bound_value"] == 19
    assert fr.find_fan(c["coloring"].red, 5) is None
    with pytest.raises(fr.UnsupportedRange):
        fr.star_fan_lower(4, 3)


def test_formulas():
    assert fr.star_fan_formula(2, 2)["lower"] == 5
    assert fr.dirac_threshold(100, 5)["threshold"] == 50.5
    assert not fr.fan_ramsey_bounds(100, 0.1)["upper_valid"]


def test_search():
    r = fr.brute_force_ramsey("star", 2, "fan", 2, cap=6)
    assert r["exact"] and r["value"] == 5
    capped = fr.brute_force_ramsey("fan", 2, "fan", 2, cap=8, workers=2)
    assert not capped["exact"] and capped["value"] == 9
    with pytest.raises(fr.CapExceeded):
        fr.brute_force_ramsey("fan", 2, "fan", 2, cap=9)


def test_chromatic_witness():
    assert fr.verify_fan_fan_witness(fr.chromatic_lower(2), 2)["bound_value"] == 9
