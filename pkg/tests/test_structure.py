import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from homhom.catalog import make_uniform
from homhom.errors import AsymmetryError, EmptySetError, EmptySliceError, FlagError, LoopError
from homhom.poset import chain, named_poset
from homhom.structure import NON_UNIFORM, ColoredStructure, build_structure

from oracle import structures


def test_k2_over_two_chain():
    G = build_structure(chain(2), ["0", "0"], {(0, 1): "1"})
    assert G.ec[1, 0] == G.poset.top


def test_example1_colors(ex1):
    assert [ex1.color(v) for v in range(4)] == ["r", "r", "b", "b"]
    a, b, c, d = range(4)
    assert ex1.color(a, c) == ex1.color(c, d) == ex1.color(b, d) == "r"
    assert ex1.color(a, d) == ex1.color(b, c) == "b"
    assert ex1.color(a, b) == "0"


def test_loop_rejected():
    p = named_poset("m2")
    with pytest.raises(LoopError):
        build_structure(p, ["0"], [["r"]])
    G = build_structure(p, ["0"], [["r"]], loops=True)
    assert G.color(0, 0) == "r"


def test_asymmetry_rejected():
    p = chain(2)
    with pytest.raises(AsymmetryError):
        build_structure(p, ["0", "0"], [["0", "1"], ["0", "0"]])
    build_structure(p, ["0", "0"], [["0", "1"], ["0", "0"]], directed=True)


def test_induced(ex1):
    assert ex1.induced(range(4)).same_data(ex1)
    ab = ex1.induced([0, 1])
    assert [ab.color(v) for v in range(2)] == ["r", "r"] and ab.color(0, 1) == "0"
    cd = ex1.induced([3, 2])
    assert cd.names == ("c", "d") and cd.index_map == (2, 3)
    assert [cd.color(v) for v in range(2)] == ["b", "b"] and cd.color(0, 1) == "r"
    with pytest.raises(EmptySetError):
        ex1.induced([])


def test_components(ex1):
    assert ColoredStructure(chain(2), [0], [[0]]).components() == [[0]]
    # a-c-d-b through nonzero pairs
    assert ex1.components() == [[0, 1, 2, 3]]
    U = make_uniform(2, "m", "1", chain(3))
    two = ColoredStructure(U.poset, [1] * 4, np.kron(np.eye(2, dtype=np.int64), U.ec))
    assert two.components() == [[0, 1], [2, 3]]


def test_summaries(ex1):
    p = chain(3)
    s = make_uniform(3, "m", "1", p).component_summaries()
    assert [(x.size, x.vertex_color, x.edge_color, x.complete) for x in s] == [(3, "m", "1", True)]
    s = ex1.summarize_component([0, 1, 2, 3])
    assert (s.size, s.vertex_color, s.edge_color, s.complete) == (4, NON_UNIFORM, NON_UNIFORM, False)
    s = make_uniform(1, "m", None, p).summarize_component([0])
    assert (s.size, s.vertex_color, s.edge_color, s.complete) == (1, "m", None, True)


def test_vertex_slice(ex1):
    assert ex1.vertex_slice("r").names == ("a", "b")
    U = make_uniform(3, "m", "1", chain(3))
    assert U.vertex_slice("m").same_data(U)
    # no vertex of Example 1 has color 1
    assert not np.any(ex1.vc == ex1.poset.index("1"))
    with pytest.raises(EmptySliceError):
        ex1.vertex_slice("1")


def test_edge_slice(ex1):
    red = ex1.edge_slice("r")
    assert sorted(red.edges) == [(0, 2), (1, 3), (2, 3)]
    assert nx.is_isomorphic(red, nx.path_graph(4))
    blue = ex1.edge_slice("b")
    assert sorted(blue.edges) == [(0, 3), (1, 2)]
    assert ex1.edge_slice("1").number_of_edges() == 0
    with pytest.raises(FlagError):
        build_structure(chain(2), ["0"], [["1"]], loops=True).edge_slice("1")


@given(structures(max_n=5), st.data())
def test_induced_composes(G, data):
    W = sorted(data.draw(st.sets(st.integers(0, G.n - 1), min_size=1)))
    sub = G.induced(W)
    U = sorted(data.draw(st.sets(st.integers(0, sub.n - 1), min_size=1)))
    direct = G.induced([W[u] for u in U])
    assert sub.induced(U).same_data(direct)
    assert sub.induced(U).index_map == direct.index_map


@given(structures(max_n=6))
def test_components_partition(G):
    comps = G.components()
    flat = [v for c in comps for v in c]
    assert sorted(flat) == list(range(G.n))


@given(structures(max_n=6, directed=False, loops=False))
def test_edge_slices_partition_nonzero_pairs(G):
    p = G.poset
    seen = {}
    for i in range(len(p)):
        if i == p.bottom:
            continue
        for e in G.edge_slice(p.name(i)).edges:
            e = tuple(sorted(e))
            assert e not in seen
            seen[e] = i
    expected = {(u, v) for u in range(G.n) for v in range(u + 1, G.n) if G.ec[u, v] != p.bottom}
    assert set(seen) == expected


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("poset,alpha,beta", [("chain3", "0", "m"), ("m2", "b", "r"), ("m2", "1", "1")])
def test_uniform_summary(n, poset, alpha, beta):
    U = make_uniform(n, alpha, beta, named_poset(poset))
    (s,) = U.component_summaries()
    assert (s.size, s.vertex_color, s.edge_color, s.complete) == (n, alpha, beta, True)
