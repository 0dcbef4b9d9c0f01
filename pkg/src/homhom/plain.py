"""Ordinary undirected graphs: Gardiner families and conversion to/from 2-chain structures."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
import numpy as np

from .errors import BadSpecError, FlagError
from .poset import chain
from .structure import ColoredStructure

UNION_OF_CLIQUES = "union_of_cliques"
BALANCED_MULTIPARTITE = "balanced_multipartite"
C5 = "c5"
LINE_K33 = "line_k33"
FAMILIES = (UNION_OF_CLIQUES, BALANCED_MULTIPARTITE, C5, LINE_K33)


@dataclass(frozen=True)
class GardinerTag:
    """One of the four families of finite ultrahomogeneous graphs.

    ``k`` copies/parts of size ``n`` for the two parametrized families; both
    are None for C5 and L(K3,3).
    """

    family: str
    k: int | None = None
    n: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BadSpecError(f"unknown Gardiner family {self.family!r}")
        if self.family in (UNION_OF_CLIQUES, BALANCED_MULTIPARTITE):
            if not (isinstance(self.k, int) and isinstance(self.n, int) and self.k >= 1 and self.n >= 1):
                raise BadSpecError(f"{self.family} needs integers k >= 1 and n >= 1")

    def __str__(self):
        if self.k is None:
            return self.family
        return f"{self.family}({self.k}, {self.n})"

    def to_json(self) -> dict:
        return {"family": self.family, "k": self.k, "n": self.n}


def line_graph_k33() -> nx.Graph:
    """L(K3,3), relabeled to 0..8 in sorted edge order."""
    lg = nx.line_graph(nx.complete_bipartite_graph(3, 3))
    return nx.convert_node_labels_to_integers(lg, ordering="sorted")


def gardiner_graph(tag: GardinerTag) -> nx.Graph:
    if tag.family == UNION_OF_CLIQUES:
        g = nx.disjoint_union_all([nx.complete_graph(tag.n) for _ in range(tag.k)])
    elif tag.family == BALANCED_MULTIPARTITE:
        g = nx.complete_multipartite_graph(*([tag.n] * tag.k))
    elif tag.family == C5:
        g = nx.cycle_graph(5)
    else:
        g = line_graph_k33()
    return nx.convert_node_labels_to_integers(g)


def lift(g: nx.Graph) -> ColoredStructure:
    """Plain graph as a 2-chain colored structure (vertex color 0, edge color 1)."""
    p = chain(2)
    nodes = sorted(g.nodes)
    pos = {v: i for i, v in enumerate(nodes)}
    n = len(nodes)
    ec = np.full((n, n), p.bottom, dtype=np.int64)
    for u, v in g.edges:
        if u == v:
            raise FlagError("plain graphs are loopless")
        ec[pos[u], pos[v]] = ec[pos[v], pos[u]] = p.top
    return ColoredStructure(p, [p.bottom] * n, ec, names=[str(v) for v in nodes])


def lower(G: ColoredStructure) -> nx.Graph:
    """Inverse of :func:`lift` for plain structures."""
    if not G.is_plain():
        raise FlagError("structure is not a plain graph")
    return G.edge_slice(G.poset.name(G.poset.top))
