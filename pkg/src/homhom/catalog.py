"""Named structures, MH-but-not-HH families, and isomorphism-class enumeration."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Hashable, Iterator

import networkx as nx
import numpy as np

from . import kernels
from .decider import decide
from .errors import BadColorError, BadSpecError, CapExceeded
from .plain import GardinerTag, gardiner_graph, lift
from .poset import Poset, diamond, named_poset
from .structure import ColoredStructure, build_structure

DEFAULT_CAP = 1 << 26
CHUNK = 1 << 15


def m2() -> Poset:
    return diamond(["b", "r"])


def make_uniform(n: int, alpha: Hashable, beta: Hashable | None, poset: Poset) -> ColoredStructure:
    """U(n, alpha, beta).  ``beta`` may be None only for n == 1."""
    if n < 1:
        raise BadSpecError("n must be at least 1")
    a = poset.index(alpha)
    if n >= 2:
        if beta is None or poset.index(beta) == poset.bottom:
            raise BadColorError("edge color of a uniform graph on 2+ vertices must be above bottom")
        b = poset.index(beta)
    else:
        b = poset.bottom
    ec = np.full((n, n), b, dtype=np.int64)
    np.fill_diagonal(ec, poset.bottom)
    return ColoredStructure(poset, [a] * n, ec)


def example1() -> ColoredStructure:
    p = m2()
    b, r = "b", "r"
    edges = {(0, 2): r, (2, 3): r, (1, 3): r, (0, 3): b, (1, 2): b}
    return build_structure(p, [r, r, b, b], edges, names=["a", "b", "c", "d"])


def fig6(n: int) -> ColoredStructure:
    """Two b-colored n-cliques joined by r edges, plus nonadjacent r-colored u, v.

    u sees clique 1 through r and clique 2 through b; v the other way round.
    For n = 1 this is ``example1`` with u, v, p1, q1 in place of a, b, c, d.
    """
    if n < 1:
        raise BadSpecError("fig6 needs n >= 1")
    p = m2()
    B, R = p.index("b"), p.index("r")
    size = 2 * n + 2
    c1 = list(range(2, 2 + n))
    c2 = list(range(2 + n, 2 + 2 * n))
    ec = np.full((size, size), p.bottom, dtype=np.int64)

    def put(x, y, c):
        ec[x, y] = ec[y, x] = c

    for cl in (c1, c2):
        for x, y in itertools.combinations(cl, 2):
            put(x, y, B)
    for x in c1:
        for y in c2:
            put(x, y, R)
    for x in c1:
        put(0, x, R)
        put(1, x, B)
    for y in c2:
        put(0, y, B)
        put(1, y, R)
    vc = [R, R] + [B] * (2 * n)
    names = ["u", "v"] + [f"p{i + 1}" for i in range(n)] + [f"q{i + 1}" for i in range(n)]
    return ColoredStructure(p, vc, ec, names=names)


def fig7(n: int) -> ColoredStructure:
    """Five n-cliques with gray (r) edges on vertices colored 0 and black (b) loops.

    Clique i is joined completely to clique i+1 (mod 5) in black and to
    clique i+2 (mod 5) in gray.
    """
    if n < 1:
        raise BadSpecError("fig7 needs n >= 1")
    p = m2()
    black, gray = p.index("b"), p.index("r")
    size = 5 * n
    clique = [list(range(i * n, (i + 1) * n)) for i in range(5)]
    ec = np.full((size, size), p.bottom, dtype=np.int64)
    for cl in clique:
        for x, y in itertools.permutations(cl, 2):
            ec[x, y] = gray
    for i in range(5):
        for step, color in ((1, black), (2, gray)):
            for x in clique[i]:
                for y in clique[(i + step) % 5]:
                    ec[x, y] = ec[y, x] = color
    np.fill_diagonal(ec, black)
    names = [f"k{i}_{j}" for i in range(5) for j in range(n)]
    return ColoredStructure(p, [p.bottom] * size, ec, loops=True, names=names)


@dataclass(frozen=True)
class ExampleSpec:
    name: str
    params: dict = field(default_factory=dict)


def make_example(spec: ExampleSpec | str, **params) -> ColoredStructure:
    """Build a cataloged structure.

    Names: ``example1``; ``fig6`` and ``fig7`` (param n); ``uniform`` (n,
    alpha, beta, poset); ``gardiner`` (family, k, n); ``plain`` (graph6 code).
    """
    if isinstance(spec, str):
        spec = ExampleSpec(spec, params)
    name = spec.name.lower()
    p = dict(spec.params)
    try:
        if name == "example1":
            return example1()
        if name == "fig6":
            return fig6(int(p.get("n", 1)))
        if name == "fig7":
            return fig7(int(p.get("n", 1)))
        if name == "uniform":
            poset = p.get("poset", "chain2")
            poset = named_poset(poset) if isinstance(poset, str) else poset
            return make_uniform(int(p["n"]), p["alpha"], p.get("beta"), poset)
        if name == "gardiner":
            k = p.get("k")
            n = p.get("n")
            tag = GardinerTag(p["family"], None if k is None else int(k), None if n is None else int(n))
            return lift(gardiner_graph(tag))
        if name == "plain":
            code = p["code"]
            return lift(nx.from_graph6_bytes(code.encode() if isinstance(code, str) else code))
    except KeyError as e:
        raise BadSpecError(f"{name}: missing parameter {e}") from None
    raise BadSpecError(f"unknown example {spec.name!r}")


# --- enumeration up to isomorphism -------------------------------------------------


@dataclass(frozen=True)
class Constraints:
    """Restrictions on enumerated structures.

    ``plain`` fixes every vertex color to bottom; ``vertex_colors`` and
    ``edge_colors`` list the allowed color names.
    """

    vertex_uniform: bool = False
    vertex_colors: tuple | None = None
    edge_colors: tuple | None = None
    plain: bool = False


def _pair_positions(n: int, directed: bool, loops: bool) -> list[tuple[int, int]]:
    if directed:
        return [(i, j) for i in range(n) for j in range(n) if loops or i != j]
    return [(i, j) for i in range(n) for j in range(i if loops else i + 1, n)]


def _position_perms(n: int, pairs, directed: bool) -> np.ndarray:
    where = {pq: k for k, pq in enumerate(pairs)}
    rows = []
    for perm in itertools.permutations(range(n)):
        if perm == tuple(range(n)):
            continue
        row = list(perm)
        for i, j in pairs:
            a, b = perm[i], perm[j]
            if not directed and a > b:
                a, b = b, a
            row.append(n + where[(a, b)])
        rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(rows), n + len(pairs))


class _Space:
    """Labeled structures of one parameter set, indexed 0..total-1 in ascending code order."""

    def __init__(self, poset: Poset, n: int, directed: bool, loops: bool, c: Constraints):
        self.poset, self.n, self.directed, self.loops = poset, n, directed, loops
        if c.plain:
            vcols = [poset.bottom]
        elif c.vertex_colors is not None:
            vcols = sorted(poset.index(x) for x in c.vertex_colors)
        else:
            vcols = list(range(len(poset)))
        if c.edge_colors is not None:
            self.ecols = np.array(sorted(poset.index(x) for x in c.edge_colors), dtype=np.int64)
        else:
            self.ecols = np.arange(len(poset), dtype=np.int64)
        if c.vertex_uniform:
            va = [[a] * n for a in vcols]
        else:
            va = [list(t) for t in itertools.product(vcols, repeat=n)]
        self.va = np.array(va, dtype=np.int64).reshape(len(va), n)
        self.pairs = _pair_positions(n, directed, loops)
        self.edge_total = len(self.ecols) ** len(self.pairs)
        self.total = len(self.va) * self.edge_total

    def codes(self, start: int, stop: int) -> np.ndarray:
        idx = np.arange(start, stop, dtype=np.int64)
        vi, ei = np.divmod(idx, self.edge_total)
        npairs = len(self.pairs)
        base = len(self.ecols)
        digits = np.empty((len(idx), npairs), dtype=np.int64)
        for q in range(npairs - 1, -1, -1):
            ei, digits[:, q] = np.divmod(ei, base)
        return np.concatenate([self.va[vi], self.ecols[digits]], axis=1)

    def structure(self, code: np.ndarray) -> ColoredStructure:
        n = self.n
        ec = np.full((n, n), self.poset.bottom, dtype=np.int64)
        for k, (i, j) in enumerate(self.pairs):
            ec[i, j] = code[n + k]
            if not self.directed:
                ec[j, i] = code[n + k]
        return ColoredStructure(self.poset, code[:n], ec, directed=self.directed, loops=self.loops)


def labeled_count(poset: Poset, n: int, directed: bool = False, loops: bool = False, constraints: Constraints | None = None) -> int:
    return _Space(poset, n, directed, loops, constraints or Constraints()).total


def encode(G: ColoredStructure) -> tuple[int, ...]:
    """Labeled code: vertex colors, then pair colors in position order."""
    pairs = _pair_positions(G.n, G.directed, G.loops)
    return tuple(int(c) for c in G.vc) + tuple(int(G.ec[i, j]) for i, j in pairs)


def enumerate_structures(
    poset: Poset,
    n: int,
    directed: bool = False,
    loops: bool = False,
    constraints: Constraints | None = None,
    cap: int = DEFAULT_CAP,
) -> Iterator[ColoredStructure]:
    """One structure per isomorphism class, each the minimum-code labeling, in ascending code order."""
    if n < 1:
        raise BadSpecError("n must be at least 1")
    space = _Space(poset, n, directed, loops, constraints or Constraints())
    if space.total > cap:
        raise CapExceeded(f"{space.total} labeled structures exceed the cap of {cap}")
    perms = _position_perms(n, space.pairs, directed)
    for start in range(0, space.total, CHUNK):
        codes = space.codes(start, min(start + CHUNK, space.total))
        mask = kernels.canonical_mask(codes, perms) if len(perms) else np.ones(len(codes), dtype=np.bool_)
        for code in codes[mask]:
            yield space.structure(code)


def search_mh_not_hh(
    poset: Poset,
    n: int,
    directed: bool = False,
    loops: bool = False,
    constraints: Constraints | None = None,
    cap: int = DEFAULT_CAP,
    budget: int | None = None,
) -> Iterator[ColoredStructure]:
    """Enumerated structures that are MH but provably not HH (unknown verdicts are skipped)."""
    for G in enumerate_structures(poset, n, directed, loops, constraints, cap):
        if decide(G, "MH", budget).member is True and decide(G, "HH", budget).member is False:
            yield G


def class_count_bruteforce(structures: list[ColoredStructure]) -> int:
    """Number of isomorphism classes by pairwise isomorphism tests; independent of canonical codes."""
    from .morphism import isomorphic

    reps: list[ColoredStructure] = []
    for G in structures:
        if not any(isomorphic(G, H) is not None for H in reps):
            reps.append(G)
    return len(reps)


def all_labeled(poset: Poset, n: int, directed: bool = False, loops: bool = False, constraints: Constraints | None = None) -> Iterator[ColoredStructure]:
    space = _Space(poset, n, directed, loops, constraints or Constraints())
    for start in range(0, space.total, CHUNK):
        for code in space.codes(start, min(start + CHUNK, space.total)):
            yield space.structure(code)


def expected_class_count_burnside(poset: Poset, n: int, directed: bool = False, loops: bool = False, constraints: Constraints | None = None) -> int:
    """Orbit count by Burnside's lemma: average number of labelings fixed by a permutation."""
    c = constraints or Constraints()
    space = _Space(poset, n, directed, loops, c)
    nv = 1 if c.plain else len(c.vertex_colors) if c.vertex_colors is not None else len(poset)
    ne = len(space.ecols)
    total = 0
    for perm in itertools.permutations(range(n)):
        seen = [False] * n
        vcycles = 0
        for i in range(n):
            if not seen[i]:
                vcycles += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        pseen = set()
        pcycles = 0
        for pq in space.pairs:
            if pq in pseen:
                continue
            pcycles += 1
            cur = pq
            while cur not in pseen:
                pseen.add(cur)
                a, b = perm[cur[0]], perm[cur[1]]
                if not directed and a > b:
                    a, b = b, a
                cur = (a, b)
        vfix = len(space.va) if c.vertex_uniform else nv ** vcycles
        total += vfix * ne ** pcycles
    return total // math.factorial(n)
