import json
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylstrata import strata_graph as sg
from weylstrata.weyl_engine.registry import build


def _relabelled(g: nx.DiGraph, seed: int) -> nx.DiGraph:
    nodes = list(g.nodes)
    shuffled = nodes[:]
    random.Random(seed).shuffle(shuffled)
    return nx.relabel_nodes(g, dict(zip(nodes, shuffled)))


def test_factorize_small():
    one = nx.DiGraph()
    one.add_node(0)
    assert sg.factorize_component(one).directed == (1,)
    assert sg.factorize_component(nx.path_graph(2, create_using=nx.DiGraph)).directed == (2,)
    assert sg.factorize_component(sg.path_product((3, 3))).directed == (3, 3)
    assert sg.factorize_component(sg.path_product((2, 2))).directed == (2, 2)


def test_factorize_rejects_bad_orientation():
    g = nx.DiGraph([(0, 1), (1, 2), (3, 2)])
    f = sg.factorize_component(g)
    assert f.directed is None and f.undirected == (4,)


def test_shape_names():
    assert sg.shape_name((1,)) == "A1"
    assert sg.shape_name((2, 2)) == "A2×A2"
    assert sg.shape_name((1,), "rank") == "A0"
    assert sg.shape_name((3,), "rank") == "A2"


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(2, 4), min_size=1, max_size=3), st.integers(0, 10**6))
def test_factorize_recovers_products(factors, seed):
    g = _relabelled(sg.path_product(factors), seed)
    assert sg.factorize_component(g).directed == tuple(sorted(factors, reverse=True))


def test_g2_and_b2_are_discrete():
    for kind, n, k in [("G", 2, 6), ("B", 2, 5)]:
        g = sg.compute_strata(kind, n)
        assert len(g.strata) == k and not g.edges
        assert all(len(s.members) == 1 for s in g.strata)


def test_e6_stratum_15_4():
    g = sg.compute_strata("E", 6)
    s = next(s for s in g.strata if s.E == "15_4")
    assert [g.names[v] for v in s.members] == ["A5+A1", "A5"]
    assert g.names[s.C_E] == "A5+A1" and g.names[s.C_prime_E] == "A5"
    assert len(g.strata) == 21


def test_exceptional_census():
    assert sg.census(sg.compute_strata("E", 7))["A4"] == 1
    e8 = sg.census(sg.compute_strata("E", 8))
    assert e8["A5"] == 1 and e8["A2×A2"] == 2
    assert set(sg.census(sg.compute_strata("E", 6))) <= {"A2", "A1"}


def test_f4_nine_ten_stratum_shape():
    g = sg.compute_strata("F", 4)
    s = next(s for s in g.strata if s.E == "9_10")
    edges = {(g.names[a], g.names[b]) for a, b in s.edges}
    assert edges == {("4A1", "3A1"), ("3A1", "A1+Ã1"), ("2A1+Ã1", "A1+Ã1")}
    assert s.factorization.undirected == (4,) and s.factorization.directed is None


@pytest.mark.parametrize("kind,n", [("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8), ("B", 5), ("D", 6), ("C", 4), ("A", 5)])
def test_strata_consistent(kind, n):
    g = sg.compute_strata(kind, n)
    assert all(s.consistent for s in g.strata)
    assert all(g.m[e.target] == g.m[e.source] + 1 for e in g.edges)
    ctx = build(kind, n)
    assert {s.C_prime_E for s in g.strata} == ctx.cl_classes()


@pytest.mark.parametrize("kind,n", [("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8), ("A", 4), ("B", 4), ("D", 5)])
def test_cl_union(kind, n):
    assert sg.check_cl_union(build(kind, n)).ok


def test_cl_union_labels():
    for n in range(2, 10):
        assert sg.check_cl_union_labels_bc(n).ok
    for n in range(4, 9):
        assert sg.check_cl_union_labels_d(n).ok


def test_label_and_engine_graphs_agree_b4():
    ctx = build("B", 4)
    g = sg.compute_strata("B", 4)
    lab = sg.label_strata_bc(4)
    mapped = {(ctx.classes[e.source].classical, ctx.classes[e.target].classical) for e in g.edges}
    assert mapped == {(e.source, e.target) for e in lab.edges}


def test_b3_edge_from_labels():
    g = sg.label_strata_bc(3)
    assert [(str(e.source), str(e.target)) for e in g.edges] == [("((2,2,2),())", "((2),(2,2))")]


def test_exports():
    g = sg.compute_strata("E", 6)
    data = sg.to_json(g)
    assert set(data) == {"group", "vertices", "edges", "strata"}
    json.dumps(data)
    s = data["strata"][5]
    assert s["members"] == ["A5+A1", "A5"] and s["factorization"] == [2]
    dot = sg.to_dot(g, 5)
    assert dot.startswith('digraph "E6"') and "->" in dot and "rank=same" in dot
    assert sg.render_text(g).splitlines()[5] == "[A5+A1],[A5] ↔ 15_4  (A2)"
