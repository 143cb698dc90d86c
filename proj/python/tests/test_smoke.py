import networkx as nx
import pytest

import isolab


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_graph6_matches_networkx():
    for text in ["D?{", "EhEG", "C~", "@", "F?zTW"]:
        g = isolab.parse_graph6(text)
        ref = nx.from_graph6_bytes(text.encode())
        assert sorted(map(tuple, g.edges())) == sorted(tuple(sorted(e)) for e in ref.edges())
        assert g.graph6() == text


def test_solve_reference_values():
    c6 = isolab.Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    r = isolab.solve(c6, "p3")
    assert r.iota == 2
    assert isolab.is_isolating(c6, "p3", r.witness)
    assert isolab.solve(isolab.Graph(5, [(i, (i + 1) % 5) for i in range(5)]), "k2").iota == 2
    assert isolab.solve(isolab.parse_graph6("C~"), isolab.Family.cycles()).iota == 1
    both = isolab.Family.of(["k3", "k1_3"])
    assert both.name == "k3+k1_3"
    assert isolab.solve(c6, both).iota == 0
    assert isolab.solve(c6, "p3", forced=[3]).witness.count(3) == 1


def test_solver_matches_oracle_on_small_graphs():
    for g in isolab.enumerate_graphs(5):
        for fam in ["k2", "p3", "k3", "cycles"]:
            assert isolab.solve(g, fam).iota == isolab.solve_oracle(g, fam).iota


def test_enumeration_matches_networkx_atlas():
    atlas = [h for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= 6 and nx.is_connected(h)]
    ours = isolab.enumerate_graphs(6)
    assert len(ours) == len(atlas)
    by_form = {isolab.canonical_form(g) for g in ours}
    assert len(by_form) == len(ours)


def test_isomorphism_agrees_with_networkx():
    graphs = isolab.enumerate_graphs(5, n_min=5, connected=False)
    for a in graphs[:12]:
        for b in graphs[:12]:
            assert isolab.is_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))


def test_constructions_and_recognition():
    stars = isolab.enumerate_pure_special("k1_3", 4)
    assert len(stars) == 2
    assert all(isolab.recognize_extremal(g, "k1_3") == isolab.ExtremalClass.PureSpecial for g in stars)
    with_layout = isolab.enumerate_pure_special("k1_3", 9, layout=True)
    assert len(with_layout) == 3
    assert all(d["q"] == 2 and len(d["constituents"]) == 2 for d in with_layout)
    (paw,) = isolab.enumerate_f_plus_e("k1_3")
    assert isolab.recognize_extremal(paw, "k1_3") == isolab.ExtremalClass.FPlusE
    assert isolab.enumerate_f_plus_e("k3") == []
    with pytest.raises(ValueError):
        isolab.enumerate_pure_special("k1_3", 3)


def test_verify_returns_reports():
    (report,) = isolab.verify("extremal", "k1_3", n_max=7, workers=2)
    assert report["ok"]
    assert report["equality_cases"] == 3
    assert report["records"][0].keys() == {"g6", "m", "iota", "bound", "class"}
    (lemmas,) = isolab.verify("lemmas", trials=20, seed=4)
    assert lemmas["ok"] and lemmas["checked"] == 80


def test_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        isolab.parse_graph6("D?")
    with pytest.raises(ValueError):
        isolab.enumerate_graphs(11)
