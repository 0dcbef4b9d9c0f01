"""Structural characterizations of MH/HH membership, independent of brute-force search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from .errors import NotVertexUniformError, PreconditionError, ShapeError
from .morphism import isomorphic
from .plain import (
    BALANCED_MULTIPARTITE,
    C5,
    LINE_K33,
    UNION_OF_CLIQUES,
    GardinerTag,
    line_graph_k33,
)
from .poset import Shape
from .structure import NON_UNIFORM, ColoredStructure

BRANCH_U1 = "U1"
BRANCH_STRICT = "STRICT"


@dataclass(frozen=True)
class PumpConfig:
    a0: int
    a1: int
    x: int

    def named(self, G: ColoredStructure) -> dict:
        return {"a0": G.names[self.a0], "a1": G.names[self.a1], "x": G.names[self.x]}


@dataclass(frozen=True)
class Violation:
    rule: str
    vertices: tuple[int, ...]
    detail: str = ""

    def to_json(self, G: ColoredStructure | None = None) -> dict:
        vs = [G.names[v] for v in self.vertices] if G is not None else list(self.vertices)
        return {"rule": self.rule, "vertices": vs, "detail": self.detail}


@dataclass
class Classification:
    member: bool
    reason: str
    branch: str | None = None
    violations: list[Violation] = field(default_factory=list)

    def to_json(self, G: ColoredStructure | None = None) -> dict:
        return {
            "member": self.member,
            "branch": self.branch,
            "reason": self.reason,
            "violations": [v.to_json(G) for v in self.violations],
        }


def find_pump_config(G: ColoredStructure) -> PumpConfig | None:
    """Least ordered triple (a0, a1, x) of distinct vertices meeting the pump conditions.

    (i)   ec(a0,a1) > 0 and ec(x,a1) > 0
    (ii)  ec(a0,x) <= ec(a0,a1) and vc(x) <= vc(a1)
    (iii) one of the two inequalities in (ii) is strict
    A finite structure with such a triple is not MH.
    """
    G.require_simple()
    leq = G.poset.leq_matrix
    bot = G.poset.bottom
    ec, vc = G.ec, G.vc
    for a0, a1, x in itertools.permutations(range(G.n), 3):
        e01 = ec[a0, a1]
        if e01 == bot or ec[x, a1] == bot:
            continue
        e0x = ec[a0, x]
        if not (leq[e0x, e01] and leq[vc[x], vc[a1]]):
            continue
        if e0x != e01 or vc[x] != vc[a1]:
            return PumpConfig(a0, a1, x)
    return None


def _require_shape(G: ColoredStructure, shape: Shape):
    got = G.poset.shape()
    if got is not shape:
        raise ShapeError(f"poset shape is {got.value}, need {shape.value}")
    G.require_simple()


def check_chain_necessary(G: ColoredStructure) -> list[Violation]:
    """Violations of the chain-case necessary conditions.

    For distinct x, y, z with ec(x,z) > 0 and ec(y,z) > 0:
      (a) ec(x,y) < ec(x,z)  iff  vc(y) > vc(z)
      (b) ec(x,y) = ec(x,z)  iff  vc(y) = vc(z)
    and for every pair with ec(x,y) > 0: vc(x) = vc(y)  (rule "adjacent-colors").
    """
    _require_shape(G, Shape.CHAIN)
    leq = G.poset.leq_matrix
    bot = G.poset.bottom
    ec, vc = G.ec, G.vc
    out = []

    def lt(a, b):
        return a != b and leq[a, b]

    for x, y, z in itertools.permutations(range(G.n), 3):
        if ec[x, z] == bot or ec[y, z] == bot:
            continue
        if lt(ec[x, y], ec[x, z]) != lt(vc[z], vc[y]):
            out.append(Violation("triple-strict", (x, y, z)))
        if (ec[x, y] == ec[x, z]) != (vc[y] == vc[z]):
            out.append(Violation("triple-equal", (x, y, z)))
    for x, y in itertools.combinations(range(G.n), 2):
        if ec[x, y] != bot and vc[x] != vc[y]:
            out.append(Violation("adjacent-colors", (x, y)))
    return out


def classify_chain(G: ColoredStructure) -> Classification:
    """MH (equivalently HH) membership over a chain.

    Member iff every component is uniform and, for components with vertex
    colors a1 <= a2, sizes n1 <= n2 and edge colors b1 <= b2 (an unset edge
    color of a single vertex is compatible with anything).
    """
    _require_shape(G, Shape.CHAIN)
    p = G.poset
    summaries = G.component_summaries()
    for s in summaries:
        if not s.uniform:
            return Classification(False, f"component {[G.names[v] for v in s.vertices]} is not uniform")
    for s1, s2 in itertools.permutations(summaries, 2):
        if not p.leq(s1.vertex_color, s2.vertex_color):
            continue
        label = f"components {[G.names[v] for v in s1.vertices]} and {[G.names[v] for v in s2.vertices]}"
        if s1.size > s2.size:
            return Classification(False, f"{label}: vertex color {s1.vertex_color} <= {s2.vertex_color} but size {s1.size} > {s2.size}")
        if s1.edge_color is not None and s2.edge_color is not None and not p.leq(s1.edge_color, s2.edge_color):
            return Classification(False, f"{label}: edge color {s1.edge_color} not below {s2.edge_color}")
    return Classification(True, "components uniform and ordered")


def _clique_union(g: nx.Graph) -> tuple[int, int] | None:
    comps = [sorted(c) for c in nx.connected_components(g)]
    sizes = {len(c) for c in comps}
    if len(sizes) != 1:
        return None
    for c in comps:
        m = len(c)
        if g.subgraph(c).number_of_edges() != m * (m - 1) // 2:
            return None
    return len(comps), sizes.pop()


def recognize_gardiner(g: nx.Graph) -> GardinerTag | None:
    """Which Gardiner family ``g`` belongs to, tested in the fixed order
    clique union, balanced multipartite, C5, L(K3,3)."""
    if any(u == v for u, v in g.edges):
        raise ValueError("plain graphs are loopless")
    if g.number_of_nodes() == 0:
        return None
    kn = _clique_union(g)
    if kn is not None:
        return GardinerTag(UNION_OF_CLIQUES, *kn)
    kn = _clique_union(nx.complement(g))
    if kn is not None:
        return GardinerTag(BALANCED_MULTIPARTITE, *kn)
    if g.number_of_nodes() == 5 and nx.is_isomorphic(g, nx.cycle_graph(5)):
        return GardinerTag(C5)
    if g.number_of_nodes() == 9 and nx.is_isomorphic(g, line_graph_k33()):
        return GardinerTag(LINE_K33)
    return None


def _red_blue(p) -> tuple[int, int]:
    mid = p.middles()
    by_name = {str(p.name(i)): i for i in mid}
    if "r" in by_name and "b" in by_name:
        return by_name["r"], by_name["b"]
    return mid[1], mid[0]


def _ultrahomogeneous(H: ColoredStructure) -> bool:
    from .decider import decide

    return decide(H, "II").member is True


def classify_diamond_vertex_uniform(G: ColoredStructure) -> Classification:
    """MH (equivalently HH) membership for vertex-uniform graphs over a diamond.

    Member iff the components are isomorphic copies of one H, where H is
    U(n, alpha, 1) (branch U1), or H is complete with every edge color strictly
    between bottom and top and H is ultrahomogeneous (branch STRICT).  With two
    middle colors STRICT is decided by the Gardiner family of the r-slice and
    the b-slice being its complement; with more it falls back to the II search.
    """
    _require_shape(G, Shape.DIAMOND)
    if not G.is_vertex_uniform():
        raise NotVertexUniformError("structure is not vertex-uniform")
    p = G.poset
    comps = G.components()
    H = G.induced(comps[0])
    for c in comps[1:]:
        if isomorphic(H, G.induced(c)) is None:
            return Classification(False, f"components {[G.names[v] for v in comps[0]]} and {[G.names[v] for v in c]} are not isomorphic")
    off = ~np.eye(H.n, dtype=np.bool_)
    colors = set(H.ec[off].tolist())
    if H.n == 1 or colors == {p.top}:
        return Classification(True, f"{len(comps)} copies of U({H.n}, {G.color(0)}, 1)", BRANCH_U1)
    if p.bottom in colors or p.top in colors:
        return Classification(False, "component mixes top-colored edges with other colors or is not complete")
    if len(p.middles()) == 2:
        red, blue = _red_blue(p)
        g_red = H.edge_slice(p.name(red))
        g_blue = H.edge_slice(p.name(blue))
        tag = recognize_gardiner(g_red)
        if tag is None:
            return Classification(False, "red slice of the component is not a Gardiner graph")
        if not nx.utils.graphs_equal(g_blue, nx.complement(g_red)):
            return Classification(False, "blue slice is not the complement of the red slice")
        return Classification(True, f"{len(comps)} copies of H with red slice {tag}", BRANCH_STRICT)
    if _ultrahomogeneous(H):
        return Classification(True, f"{len(comps)} copies of an ultrahomogeneous complete H", BRANCH_STRICT)
    return Classification(False, "component is complete with middle colors but not ultrahomogeneous")


def check_color1_structure(G: ColoredStructure) -> list[Violation]:
    """Necessary conditions for MH when some pair has the top color.

    Rules: "top-neighbor" every vertex has a top-colored partner;
    "top-transitive" ec(x,y) = ec(y,z) = top forces ec(x,z) = top;
    "component-top" vertices of one component are pairwise top-colored;
    "components-equal" all components are isomorphic to the same U(n, alpha, 1).
    """
    G.require_simple()
    if not G.is_vertex_uniform():
        raise NotVertexUniformError("structure is not vertex-uniform")
    top = G.poset.top
    ec = G.ec
    n = G.n
    if not np.any(ec == top):
        raise PreconditionError("no pair carries the top color")
    out = []
    for x in range(n):
        if not any(ec[x, y] == top for y in range(n) if y != x):
            out.append(Violation("top-neighbor", (x,)))
    for x, y, z in itertools.permutations(range(n), 3):
        if x < z and ec[x, y] == top and ec[y, z] == top and ec[x, z] != top:
            out.append(Violation("top-transitive", (x, y, z)))
    comps = G.components()
    for c in comps:
        for x, y in itertools.combinations(c, 2):
            if ec[x, y] != top:
                out.append(Violation("component-top", (x, y)))
    sizes = {len(c) for c in comps}
    all_top = all(ec[x, y] == top for c in comps for x, y in itertools.combinations(c, 2))
    if len(sizes) > 1 or not all_top:
        out.append(Violation("components-equal", tuple(c[0] for c in comps), f"sizes {sorted(sizes)}"))
    return out
