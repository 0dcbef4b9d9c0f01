import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from homhom.catalog import make_uniform
from homhom.decider import CLASS_NAMES, ExtensionClass, decide, hierarchy_profile
from homhom.morphism import MorphismKind, PartialMap, check_morphism, extend_to_total
from homhom.plain import lift
from homhom.poset import chain, named_poset
from homhom.structure import ColoredStructure

from oracle import oracle_decide, structures


def test_example1_mh_member(ex1, backend):
    assert decide(ex1, "MH").member is True


def test_example1_hh_witness(ex1, backend):
    v = decide(ex1, "HH")
    assert v.member is False
    assert v.witness.pairs == ((0, 0), (1, 0))
    assert v.witness.named(ex1) == [["a", "a"], ["b", "a"]]
    assert v.to_json(ex1)["witness"] == {"pairs": [["a", "a"], ["b", "a"]]}


def test_p3_not_hh(backend):
    assert decide(lift(nx.path_graph(3)), "HH").member is False


def test_class_names():
    assert CLASS_NAMES == ("II", "IM", "IH", "MI", "MM", "MH", "HI", "HM", "HH")
    c = ExtensionClass.parse("MH")
    assert c.source is MorphismKind.MONO and c.target is MorphismKind.HOMO
    with pytest.raises(ValueError):
        ExtensionClass.parse("XY")


def test_uniform_top_all_classes():
    U = make_uniform(3, "m", "1", chain(3))
    prof = hierarchy_profile(U)
    assert all(prof.member(c) for c in CLASS_NAMES)
    # brute-force agreement at n = 3
    for c in CLASS_NAMES:
        cls = ExtensionClass.parse(c)
        assert oracle_decide(U, int(cls.source), int(cls.target))[0] is True


def test_example1_profile(ex1):
    prof = hierarchy_profile(ex1)
    assert prof.member("MH") is True and prof.member("HH") is False
    assert prof.consistent


def test_consistency_flag_independent_of_values():
    g = nx.Graph([(0, 1)])
    g.add_node(2)
    prof = hierarchy_profile(lift(g))
    assert prof.consistent


def test_budget_gives_unknown(ex1):
    v = decide(ex1, "HH", budget=3)
    assert v.member is None and v.witness is None
    assert v.checked <= 3
    # enough budget reproduces the unlimited verdict
    full = decide(ex1, "HH")
    assert decide(ex1, "HH", budget=full.checked + 1).member is False


def test_profile_unknown_cells_do_not_break_consistency(ex1):
    assert hierarchy_profile(ex1, budget=2).consistent


@settings(max_examples=80, deadline=None)
@given(structures(max_n=4), st.sampled_from(CLASS_NAMES))
def test_matches_bruteforce(G, name):
    cls = ExtensionClass.parse(name)
    member, pairs = oracle_decide(G, int(cls.source), int(cls.target))
    v = decide(G, cls)
    assert v.member is member
    if not member:
        assert v.witness.pairs == pairs


@settings(max_examples=40, deadline=None)
@given(structures(max_n=4), st.sampled_from(CLASS_NAMES))
def test_backends_agree(G, name):
    from homhom import kernels

    got = []
    for b in kernels.available():
        with kernels.using(b):
            v = decide(G, name)
            got.append((v.member, v.witness, v.checked))
    assert all(g == got[0] for g in got)


@settings(max_examples=60, deadline=None)
@given(structures(max_n=4), st.sampled_from(CLASS_NAMES))
def test_witness_validity(G, name):
    v = decide(G, name)
    if v.member is False:
        assert check_morphism(v.witness, G, G, v.cls.source)
        assert extend_to_total(G, v.witness, v.cls.target) is None


@settings(max_examples=40, deadline=None)
@given(structures(max_n=4), st.data())
def test_iso_invariance(G, data):
    perm = np.array(data.draw(st.permutations(range(G.n))))
    H = ColoredStructure(G.poset, G.vc[perm], G.ec[np.ix_(perm, perm)], directed=G.directed, loops=G.loops)
    for name in ("II", "MH", "HH", "HI"):
        assert decide(G, name).member == decide(H, name).member


@settings(max_examples=40, deadline=None)
@given(structures(max_n=4))
def test_hierarchy_inclusions(G):
    assert hierarchy_profile(G).consistent


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("poset,alpha,beta", [("m2", "b", "r"), ("m2", "0", "1"), ("chain3", "m", "m")])
def test_complete_vertex_uniform_connected(n, poset, alpha, beta):
    G = make_uniform(n, alpha, beta, named_poset(poset))
    assert decide(G, "HH").member == decide(G, "MH").member == decide(G, "II").member


def test_connected_complete_bicolored():
    # K4 over M2 with a red perfect matching, blue elsewhere: complete, vertex-uniform, connected
    p = named_poset("m2")
    b, r = p.index("b"), p.index("r")
    ec = np.full((4, 4), b)
    np.fill_diagonal(ec, p.bottom)
    ec[0, 1] = ec[1, 0] = ec[2, 3] = ec[3, 2] = r
    G = ColoredStructure(p, [0] * 4, ec)
    assert decide(G, "HH").member == decide(G, "MH").member == decide(G, "II").member is True


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_plain_graphs_mh_equals_hh(n):
    from homhom.catalog import Constraints, enumerate_structures

    for G in enumerate_structures(chain(2), n, constraints=Constraints(plain=True)):
        assert decide(G, "MH").member == decide(G, "HH").member


def test_empty_map_counts_as_checked():
    G = make_uniform(1, "0", None, chain(2))
    v = decide(G, "HH")
    assert v.member is True and v.checked == 2
