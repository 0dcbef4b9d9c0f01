"""Finite L-colored graphs and their directed / looped generalizations."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

import networkx as nx
import numpy as np

from .errors import (
    AsymmetryError,
    BadColorError,
    EmptySetError,
    EmptySliceError,
    FlagError,
    LoopError,
)
from .poset import Poset


class Marker(enum.Enum):
    NON_UNIFORM = "non-uniform"

    def __repr__(self):
        return self.value


NON_UNIFORM = Marker.NON_UNIFORM


@dataclass(frozen=True)
class ComponentSummary:
    """Descriptor of one connected component.

    ``edge_color`` is ``None`` for a single vertex (vacuously edge-uniform,
    color unset), ``NON_UNIFORM``, or the common edge color name.
    """

    vertices: tuple[int, ...]
    size: int
    vertex_color: Hashable
    edge_color: Hashable | None
    complete: bool

    @property
    def uniform(self) -> bool:
        return self.vertex_color is not NON_UNIFORM and self.edge_color is not NON_UNIFORM


class ColoredStructure:
    """Vertex colors ``vc[v]`` and edge colors ``ec[u, v]`` as poset indices.

    Immutable.  ``index_map`` records, for structures produced by
    :meth:`induced`, which vertex of the parent each vertex came from.
    """

    __slots__ = ("poset", "vc", "ec", "directed", "loops", "names", "index_map")

    def __init__(
        self,
        poset: Poset,
        vc,
        ec,
        *,
        directed: bool = False,
        loops: bool = False,
        names: Sequence[Hashable] | None = None,
        index_map: Sequence[int] | None = None,
    ):
        vc = np.array(vc, dtype=np.int64).reshape(-1)
        ec = np.array(ec, dtype=np.int64)
        n = vc.shape[0]
        if n == 0:
            raise EmptySetError("structures must have at least one vertex")
        if ec.shape != (n, n):
            raise ValueError(f"edge color matrix has shape {ec.shape}, expected {(n, n)}")
        k = len(poset)
        if vc.min() < 0 or vc.max() >= k or ec.min() < 0 or ec.max() >= k:
            raise BadColorError("color index outside the poset")
        if not loops and np.any(np.diag(ec) != poset.bottom):
            v = int(np.flatnonzero(np.diag(ec) != poset.bottom)[0])
            raise LoopError(f"vertex {v} carries a loop color but loops are not allowed")
        if not directed and not np.array_equal(ec, ec.T):
            u, v = np.argwhere(ec != ec.T)[0]
            raise AsymmetryError(f"pair ({u}, {v}) colored asymmetrically in an undirected structure")
        vc.setflags(write=False)
        ec.setflags(write=False)
        self.poset = poset
        self.vc = vc
        self.ec = ec
        self.directed = bool(directed)
        self.loops = bool(loops)
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        if len(self.names) != n or len(set(self.names)) != n:
            raise ValueError("vertex names must be unique, one per vertex")
        self.index_map = tuple(index_map) if index_map is not None else tuple(range(n))

    @property
    def n(self) -> int:
        return self.vc.shape[0]

    def __len__(self) -> int:
        return self.n

    def __repr__(self):
        p = self.poset
        vcol = [p.name(c) for c in self.vc]
        edges = self.colored_pairs()
        return f"ColoredStructure(n={self.n}, vc={vcol}, edges={edges}, directed={self.directed}, loops={self.loops})"

    def same_data(self, other: "ColoredStructure") -> bool:
        """Equal poset, flags and color arrays (names ignored)."""
        return (
            self.poset == other.poset
            and self.directed == other.directed
            and self.loops == other.loops
            and np.array_equal(self.vc, other.vc)
            and np.array_equal(self.ec, other.ec)
        )

    def vertex(self, name: Hashable) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no vertex named {name!r}") from None

    def color(self, u: int, v: int | None = None) -> Hashable:
        if v is None:
            return self.poset.name(int(self.vc[u]))
        return self.poset.name(int(self.ec[u, v]))

    def colored_pairs(self) -> list[tuple[Hashable, Hashable, Hashable]]:
        """Non-bottom entries as (u, v, color) with vertex names; one entry per unordered pair if undirected."""
        out = []
        for u in range(self.n):
            for v in range(self.n):
                if not self.directed and v < u:
                    continue
                c = int(self.ec[u, v])
                if c != self.poset.bottom:
                    out.append((self.names[u], self.names[v], self.poset.name(c)))
        return out

    def is_vertex_uniform(self) -> bool:
        return bool(np.all(self.vc == self.vc[0]))

    def is_plain(self) -> bool:
        """Undirected, loopless, two-element poset, all vertices bottom-colored."""
        return (
            len(self.poset) == 2
            and not self.directed
            and not self.loops
            and bool(np.all(self.vc == self.poset.bottom))
        )

    def require_simple(self):
        if self.directed or self.loops:
            raise FlagError("operation needs an undirected loopless structure")

    def induced(self, vertices: Iterable[int]) -> "ColoredStructure":
        w = sorted(set(int(v) for v in vertices))
        if not w:
            raise EmptySetError("induced substructure on the empty set")
        idx = np.array(w)
        return ColoredStructure(
            self.poset,
            self.vc[idx],
            self.ec[np.ix_(idx, idx)],
            directed=self.directed,
            loops=self.loops,
            names=[self.names[v] for v in w],
            index_map=[self.index_map[v] for v in w],
        )

    def components(self) -> list[list[int]]:
        """Classes of the equivalence generated by nonzero-colored pairs, ordered by least vertex."""
        nz = self.ec != self.poset.bottom
        nz = nz | nz.T
        seen = np.zeros(self.n, dtype=np.bool_)
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                u = stack.pop()
                for v in np.flatnonzero(nz[u] & ~seen):
                    seen[v] = True
                    comp.append(int(v))
                    stack.append(int(v))
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def summarize_component(self, vertices: Sequence[int]) -> ComponentSummary:
        vs = sorted(vertices)
        p = self.poset
        colors = {int(self.vc[v]) for v in vs}
        vcol = p.name(colors.pop()) if len(colors) == 1 else NON_UNIFORM
        pairs = [int(self.ec[u, v]) for u in vs for v in vs if u != v]
        if not pairs:
            ecol = None
        elif len(set(pairs)) == 1 and pairs[0] != p.bottom:
            ecol = p.name(pairs[0])
        else:
            ecol = NON_UNIFORM
        complete = all(c != p.bottom for c in pairs)
        return ComponentSummary(tuple(vs), len(vs), vcol, ecol, complete)

    def component_summaries(self) -> list[ComponentSummary]:
        return [self.summarize_component(c) for c in self.components()]

    def vertex_slice(self, alpha: Hashable) -> "ColoredStructure":
        a = self.poset.index(alpha)
        w = np.flatnonzero(self.vc == a)
        if len(w) == 0:
            raise EmptySliceError(f"no vertex has color {alpha!r}")
        return self.induced(w)

    def edge_slice(self, alpha: Hashable) -> nx.Graph:
        self.require_simple()
        a = self.poset.index(alpha)
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        us, vs = np.nonzero(np.triu(self.ec == a, k=1))
        g.add_edges_from(zip(us.tolist(), vs.tolist()))
        return g


def build_structure(
    poset: Poset,
    vertex_colors: Sequence[Hashable],
    edge_colors: Sequence[Sequence[Hashable]] | Mapping[tuple[int, int], Hashable] | None = None,
    *,
    directed: bool = False,
    loops: bool = False,
    names: Sequence[Hashable] | None = None,
) -> ColoredStructure:
    """Build from color names.

    ``edge_colors`` is either a full n x n matrix of names or a mapping from
    vertex-index pairs to names; omitted pairs are bottom.  For undirected
    structures a mapping entry (u, v) also sets (v, u).
    """
    n = len(vertex_colors)
    idx = poset.index

    def lookup(c):
        try:
            return idx(c)
        except KeyError as e:
            raise BadColorError(str(e)) from None

    vc = [lookup(c) for c in vertex_colors]
    ec = np.full((n, n), poset.bottom, dtype=np.int64)
    if edge_colors is None:
        pass
    elif isinstance(edge_colors, Mapping):
        for (u, v), c in edge_colors.items():
            ec[u, v] = lookup(c)
            if not directed and u != v:
                ec[v, u] = lookup(c)
    else:
        rows = list(edge_colors)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("edge color matrix must be n x n")
        ec = np.array([[lookup(c) for c in r] for r in rows], dtype=np.int64)
    return ColoredStructure(poset, vc, ec, directed=directed, loops=loops, names=names)
