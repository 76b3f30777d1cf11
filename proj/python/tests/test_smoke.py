import math

import pytest

import dcdkit


def test_type_formula():
    for n in range(2, 6):
        sig = dcdkit.dcd_build(n).signature()
        assert sig["balanced"]
        assert sig["p"] == math.comb(2 * n - 1, n - 1)
        assert sig["k"] == n
    assert dcdkit.dcd_build(4).signature()["text"] == "(35_4)"


def test_levi_graph_is_kronecker_cover():
    levi = dcdkit.dcd_build(4).levi_graph().without_colors()
    cover = dcdkit.kronecker_cover(dcdkit.odd_graph(4)).without_colors()
    assert dcdkit.canonical_form(levi) == dcdkit.canonical_form(cover)
    assert dcdkit.isomorphic(levi, cover) is not None


def test_danzer_graph():
    g = dcdkit.danzer_graph()
    assert (g.vertex_count, g.edge_count) == (70, 140)
    assert dcdkit.automorphism_order(g) == "10080"
    assert dcdkit.edge_transitive(g)
    assert dcdkit.girth(g) == 6
    cycle = dcdkit.hamilton_cycle(g)
    assert sorted(cycle) == list(range(70))


def test_decomposition_and_polarity():
    d = dcdkit.decompose(4, 0)
    assert d["c1"].signature()["text"] == "(15_4, 20_3)"
    assert d["cross"] == 20 and d["duality"] and d["round_trip"]
    assert all(dcdkit.dcd_polarity(n) for n in range(2, 6))


def test_cyclic_configuration_differs():
    c = dcdkit.cyclic_configuration([0, 1, 8, 14], 35)
    assert c.signature()["text"] == "(35_4)"
    assert c.is_self_polar()
    assert not c.isomorphic(dcdkit.dcd_build(4))


def test_exact_realizations():
    r = dcdkit.realize_project(4, 3)
    assert r["spatial_incidences"] == r["planar_incidences"] == 140
    assert r["clean"]
    assert r["svg"].startswith("<svg")
    assert dcdkit.construction2(2)["clean"]
    assert dcdkit.point_circles(2)["structure"].isomorphic(dcdkit.dcd_build(4))
    s = dcdkit.steiner_quadrilateral(5)
    assert s["circles_concurrent"] and s["centers_concyclic"] and s["orthocenters_collinear"]


def test_voltage_round_trip():
    g = dcdkit.danzer_graph()
    q = dcdkit.voltage_quotient(g, 5)
    assert q["k"] == 5 and q["vertices"] == 14
    assert dcdkit.isomorphic(dcdkit.voltage_cover(q), g) is not None


def test_rotsearch():
    danzer = dcdkit.rotsearch(k=7, seeds=20)
    assert danzer["histogram"]["realization"] == 0
    assert "no non-degenerate solution found in 20 starts" in danzer["summary"]
    coxeter = dcdkit.rotsearch(seeds=5, coxeter=True)
    assert coxeter["histogram"]["realization"] > 0
    assert coxeter["best"]["residual"] < 1e-18


def test_errors():
    with pytest.raises(dcdkit.DcdkitError):
        dcdkit.Graph.from_edgelist("nonsense")
    with pytest.raises(dcdkit.DcdkitError):
        dcdkit.voltage_quotient(dcdkit.coxeter_graph(), 5)
