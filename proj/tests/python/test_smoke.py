import pytest

import sizeramsey as sr


def test_graph_and_graph6_roundtrip():
    g = sr.family("H3")
    assert g.order == 10
    assert g.size == 18
    assert sr.parse_graph6(g.graph6()) == g
    assert sr.write_graph6(g) == g.graph6()


def test_canonical_and_isomorphism():
    a = sr.Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    b = sr.Graph.from_edges(4, [(3, 0), (3, 1), (3, 2)])
    assert sr.canonical_form(a) == sr.canonical_form(b)
    assert sr.is_isomorphic(a, b)
    assert not sr.is_isomorphic(a, sr.family("P4"))


def test_contains_witness():
    w = sr.contains(sr.family("F2"), "K3")
    assert w is not None
    assert len(w["vertices"]) == 3
    assert sr.contains(sr.family("C6"), "C5") is None


def test_arrows_and_certificate():
    verdict = sr.arrows(sr.family("H3"), "2K2", "F3")
    assert verdict["arrows"]

    refuted = sr.arrows(sr.family("C6"), "2K2", "2P3")
    assert not refuted["arrows"]
    cert = refuted["certificate"]
    host = sr.parse_graph6(cert["host"])
    red = [tuple(e) for e in cert["red"]]
    blue = [tuple(e) for e in cert["blue"]]
    assert sr.check_coloring(host, red, blue, "2K2", "2P3")


def test_enumeration_counts():
    assert [len(sr.enumerate_graphs(q)) for q in (1, 2, 3)] == [1, 2, 5]
    with pytest.raises(sr.BudgetExceeded):
        sr.enumerate_graphs(16)


def test_size_ramsey():
    report = sr.size_ramsey("2K2", "K3", budget_edges=6)
    assert report["status"] == "exact"
    assert report["value"] == 6
    assert sr.predicted("2K2", "K3") == 6
    assert sr.witness("2K2", "K3").size == 6


def test_matching_and_period3():
    assert sr.max_matching(sr.family("C5"))["size"] == 2
    coloring = sr.period3_coloring(sr.family("C6"))
    assert len(coloring["red"]) == 2
    lhs, ok = sr.eval_inequality1([4], [], 3, 0)
    assert (lhs, ok) == (3, True)


def test_verify_quick():
    results = sr.verify(level="quick")
    assert results and all(r["pass"] for r in results)
