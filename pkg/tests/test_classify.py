import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from homhom.catalog import Constraints, enumerate_structures, make_uniform
from homhom.classify import (
    BRANCH_STRICT,
    BRANCH_U1,
    PumpConfig,
    check_chain_necessary,
    check_color1_structure,
    classify_chain,
    classify_diamond_vertex_uniform,
    find_pump_config,
    recognize_gardiner,
)
from homhom.decider import decide
from homhom.errors import NotVertexUniformError, PreconditionError, ShapeError
from homhom.plain import BALANCED_MULTIPARTITE, C5, LINE_K33, UNION_OF_CLIQUES, GardinerTag, lift, line_graph_k33
from homhom.poset import chain, diamond, named_poset
from homhom.structure import ColoredStructure, build_structure

from oracle import HOMO, MONO, oracle_decide, structures


def disjoint(*parts):
    p = parts[0].poset
    n = sum(G.n for G in parts)
    vc = np.concatenate([G.vc for G in parts])
    ec = np.full((n, n), p.bottom, dtype=np.int64)
    off = 0
    for G in parts:
        ec[off : off + G.n, off : off + G.n] = G.ec
        off += G.n
    return ColoredStructure(p, vc, ec)


def bicolored(g: nx.Graph, poset=None, red="r", blue="b", vertex="0"):
    """Complete structure whose ``red`` slice is ``g`` and ``blue`` slice its complement."""
    p = poset or named_poset("m2")
    n = g.number_of_nodes()
    ec = np.full((n, n), p.index(blue), dtype=np.int64)
    np.fill_diagonal(ec, p.bottom)
    for u, v in g.edges:
        ec[u, v] = ec[v, u] = p.index(red)
    return ColoredStructure(p, [p.index(vertex)] * n, ec)


# --- pump configurations ---


def test_pump_on_path():
    G = lift(nx.path_graph(3))
    assert find_pump_config(G) == PumpConfig(0, 1, 2)
    assert decide(G, "MH").member is False


@pytest.mark.parametrize("n", [3, 4])
def test_no_pump_on_uniform(n):
    assert find_pump_config(make_uniform(n, "m", "1", chain(3))) is None


def test_no_pump_in_example1(ex1):
    ec, vc, leq = ex1.ec, ex1.vc, ex1.poset.leq_matrix
    hits = []
    for a0, a1, x in itertools.permutations(range(4), 3):
        i = ec[a0, a1] != 0 and ec[x, a1] != 0
        ii = leq[ec[a0, x], ec[a0, a1]] and leq[vc[x], vc[a1]]
        iii = ec[a0, x] != ec[a0, a1] or vc[x] != vc[a1]
        if i and ii and iii:
            hits.append((a0, a1, x))
    assert len(list(itertools.permutations(range(4), 3))) == 24
    assert hits == []
    assert find_pump_config(ex1) is None


@settings(max_examples=80, deadline=None)
@given(structures(max_n=4, directed=False, loops=False))
def test_pump_soundness(G):
    if find_pump_config(G) is not None:
        assert oracle_decide(G, MONO, HOMO)[0] is False


# --- chain ---


def test_chain_necessary_uniform_empty():
    assert check_chain_necessary(make_uniform(3, "m", "m", chain(3))) == []


def test_chain_necessary_adjacent_colors():
    G = build_structure(chain(3), ["0", "m"], {(0, 1): "m"})
    rules = {v.rule for v in check_chain_necessary(G)}
    assert "adjacent-colors" in rules


def test_chain_necessary_path():
    vs = check_chain_necessary(lift(nx.path_graph(3)))
    assert ("triple-strict", (0, 2, 1)) in {(v.rule, v.vertices) for v in vs}


def test_chain_requires_chain(ex1):
    with pytest.raises(ShapeError):
        check_chain_necessary(ex1)
    with pytest.raises(ShapeError):
        classify_chain(ex1)


@settings(max_examples=80, deadline=None)
@given(structures(max_n=4, posets=("chain2", "chain3"), directed=False, loops=False))
def test_chain_necessary_soundness(G):
    if check_chain_necessary(G):
        assert oracle_decide(G, MONO, HOMO)[0] is False


def test_chain_sizes_differ():
    p = chain(3)
    G = disjoint(make_uniform(2, "m", "1", p), make_uniform(3, "m", "1", p))
    assert classify_chain(G).member is False


def test_chain_ordered_components():
    p = chain(3)
    G = disjoint(make_uniform(2, "0", "m", p), make_uniform(3, "m", "1", p))
    assert classify_chain(G).member is True
    assert decide(G, "MH").member is True and decide(G, "HH").member is True


def test_chain_nonuniform_component():
    cl = classify_chain(lift(nx.path_graph(3)))
    assert cl.member is False and "not uniform" in cl.reason


@settings(max_examples=80, deadline=None)
@given(structures(max_n=4, posets=("chain2", "chain3"), directed=False, loops=False))
def test_chain_matches_bruteforce(G):
    m = classify_chain(G).member
    assert oracle_decide(G, MONO, HOMO)[0] is m
    assert oracle_decide(G, HOMO, HOMO)[0] is m


# --- Gardiner ---


@pytest.mark.parametrize(
    "g,tag",
    [
        (nx.cycle_graph(5), GardinerTag(C5)),
        (nx.complete_bipartite_graph(3, 3), GardinerTag(BALANCED_MULTIPARTITE, 2, 3)),
        (nx.path_graph(3), None),
        (nx.complete_graph(4), GardinerTag(UNION_OF_CLIQUES, 1, 4)),
        (nx.empty_graph(3), GardinerTag(UNION_OF_CLIQUES, 3, 1)),
        (line_graph_k33(), GardinerTag(LINE_K33)),
        (nx.disjoint_union(nx.complete_graph(3), nx.complete_graph(3)), GardinerTag(UNION_OF_CLIQUES, 2, 3)),
    ],
)
def test_recognize_gardiner(g, tag):
    assert recognize_gardiner(g) == tag


def test_line_graph_k33_shape():
    g = line_graph_k33()
    assert g.number_of_nodes() == 9 and all(d == 4 for _, d in g.degree)
    # two edges of K3,3 are adjacent iff they share an endpoint
    assert nx.is_isomorphic(g, nx.cartesian_product(nx.complete_graph(3), nx.complete_graph(3)))


def test_path_not_ultrahomogeneous():
    assert decide(lift(nx.path_graph(3)), "II").member is False


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_gardiner_matches_ii(n):
    for G in enumerate_structures(chain(2), n, constraints=Constraints(plain=True)):
        g = G.edge_slice("1")
        assert (recognize_gardiner(g) is not None) == decide(G, "II").member


# --- diamond, vertex-uniform ---


def test_diamond_two_uniform_copies():
    p = named_poset("m2")
    G = disjoint(make_uniform(3, "r", "1", p), make_uniform(3, "r", "1", p))
    cl = classify_diamond_vertex_uniform(G)
    assert cl.member is True and cl.branch == BRANCH_U1


def test_diamond_c5_red():
    G = bicolored(nx.cycle_graph(5))
    cl = classify_diamond_vertex_uniform(G)
    assert cl.member is True and cl.branch == BRANCH_STRICT


def test_diamond_path_red_k4():
    G = bicolored(nx.path_graph(4))
    assert recognize_gardiner(nx.path_graph(4)) is None
    assert classify_diamond_vertex_uniform(G).member is False
    assert oracle_decide(G, MONO, HOMO)[0] is False


def test_diamond_m3_falls_back_to_ii():
    p = diamond(["a", "b", "c"])
    G = make_uniform(3, "0", "a", p)
    cl = classify_diamond_vertex_uniform(G)
    assert cl.member is True and cl.branch == BRANCH_STRICT
    # a-colored triangle with one b edge: complete but not ultrahomogeneous
    ec = G.ec.copy()
    ec[0, 1] = ec[1, 0] = p.index("b")
    H = ColoredStructure(p, G.vc, ec)
    assert classify_diamond_vertex_uniform(H).member is decide(H, "MH").member is False


def test_diamond_scope_errors(ex1):
    with pytest.raises(NotVertexUniformError):
        classify_diamond_vertex_uniform(ex1)
    with pytest.raises(ShapeError):
        classify_diamond_vertex_uniform(make_uniform(2, "0", "1", chain(2)))


@settings(max_examples=80, deadline=None)
@given(structures(max_n=4, posets=("m2",), directed=False, loops=False))
def test_diamond_matches_bruteforce(G):
    if not G.is_vertex_uniform():
        return
    m = classify_diamond_vertex_uniform(G).member
    assert oracle_decide(G, MONO, HOMO)[0] is m
    assert oracle_decide(G, HOMO, HOMO)[0] is m


# --- top-colored pairs ---


def test_color1_uniform_copies_clean():
    p = named_poset("m2")
    G = disjoint(make_uniform(3, "b", "1", p), make_uniform(3, "b", "1", p))
    assert check_color1_structure(G) == []


def test_color1_transitivity():
    p = named_poset("m2")
    G = build_structure(p, ["0"] * 3, {(0, 1): "1", (1, 2): "1", (0, 2): "r"})
    assert "top-transitive" in {v.rule for v in check_color1_structure(G)}


def test_color1_component():
    p = named_poset("m2")
    G = build_structure(p, ["0"] * 3, {(0, 1): "1", (1, 2): "r"})
    rules = {v.rule for v in check_color1_structure(G)}
    assert "component-top" in rules


def test_color1_precondition():
    with pytest.raises(PreconditionError):
        check_color1_structure(make_uniform(3, "0", "r", named_poset("m2")))


@settings(max_examples=80, deadline=None)
@given(structures(max_n=4, posets=("m2", "chain3"), directed=False, loops=False))
def test_color1_soundness(G):
    if not G.is_vertex_uniform() or not np.any(G.ec == G.poset.top):
        return
    if check_color1_structure(G):
        assert oracle_decide(G, MONO, HOMO)[0] is False
