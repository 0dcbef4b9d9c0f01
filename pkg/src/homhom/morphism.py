"""Partial maps, morphism checks, extension search and isomorphism."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np

from . import kernels
from .errors import PosetMismatchError
from .kernels import fallback
from .structure import ColoredStructure


class MorphismKind(enum.IntEnum):
    HOMO = kernels.HOMO
    MONO = kernels.MONO
    ISO = kernels.ISO

    @property
    def letter(self) -> str:
        return "HMI"[self]

    @classmethod
    def from_letter(cls, s: str) -> "MorphismKind":
        try:
            return cls("HMI".index(s.upper()))
        except ValueError:
            raise ValueError(f"unknown morphism kind {s!r}") from None


HOMO, MONO, ISO = MorphismKind.HOMO, MorphismKind.MONO, MorphismKind.ISO


@dataclass(frozen=True)
class PartialMap:
    """Finite partial function, stored as (source, target) pairs sorted by source."""

    pairs: tuple[tuple[int, int], ...]
    kind: MorphismKind | None = None

    def __post_init__(self):
        pairs = tuple(sorted((int(a), int(b)) for a, b in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        srcs = [a for a, _ in pairs]
        if len(set(srcs)) != len(srcs):
            raise ValueError("partial map has a repeated source")
        if self.kind in (MONO, ISO) and len(set(self.image)) != len(pairs):
            raise ValueError(f"{self.kind.name.lower()} partial map must be injective")

    @classmethod
    def from_dict(cls, mapping: Mapping[int, int], kind: MorphismKind | None = None) -> "PartialMap":
        return cls(tuple(mapping.items()), kind)

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.pairs)

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def restrict(self, sources) -> "PartialMap":
        keep = set(sources)
        return PartialMap(tuple(p for p in self.pairs if p[0] in keep), self.kind)

    def assignment(self, n: int) -> np.ndarray:
        a = np.full(n, -1, dtype=np.int64)
        for x, y in self.pairs:
            a[x] = y
        return a

    def named(self, G: ColoredStructure) -> list[list]:
        return [[G.names[a], G.names[b]] for a, b in self.pairs]

    def __str__(self):
        top = " ".join(str(a) for a in self.domain)
        bottom = " ".join(str(b) for b in self.image)
        return f"({top} / {bottom})"


def _same_poset(G: ColoredStructure, H: ColoredStructure):
    if G.poset != H.poset:
        raise PosetMismatchError("structures are colored by different posets")


def check_morphism(f: PartialMap, G: ColoredStructure, H: ColoredStructure, kind: MorphismKind) -> bool:
    """Is ``f`` a ``kind``-morphism from G[dom f] to H[im f]?"""
    _same_poset(G, H)
    kind = MorphismKind(kind)
    leq = G.poset.leq_matrix
    pairs = f.pairs
    if kind != HOMO and len(set(f.image)) != len(pairs):
        return False
    for i, (x, s) in enumerate(pairs):
        if kind == ISO:
            if G.vc[x] != H.vc[s] or G.ec[x, x] != H.ec[s, s]:
                return False
        elif not (leq[G.vc[x], H.vc[s]] and leq[G.ec[x, x], H.ec[s, s]]):
            return False
        for y, t in pairs[:i]:
            a, b = G.ec[x, y], G.ec[y, x]
            c, d = H.ec[s, t], H.ec[t, s]
            if kind == ISO:
                if a != c or b != d:
                    return False
            elif not (leq[a, c] and leq[b, d]):
                return False
    return True


def enumerate_partial(G: ColoredStructure, kind: MorphismKind, max_size: int | None = None) -> Iterator[PartialMap]:
    """Every partial ``kind``-morphism of G with at most ``max_size`` pairs.

    Ordered by domain size, then lexicographically by sorted pairs.  The empty
    map comes first.
    """
    kind = MorphismKind(kind)
    n = G.n
    top = n if max_size is None else min(max_size, n)
    leq = G.poset.leq_matrix
    for k in range(top + 1):
        for dom, img in fallback.iter_partial(leq, G.vc, G.ec, int(kind), k):
            yield PartialMap(tuple(zip(dom, img)), kind)


def extend_to_total(G: ColoredStructure, f: PartialMap, target_kind: MorphismKind) -> PartialMap | None:
    """First total self-map of G (in ascending branch order) that agrees with ``f`` and is
    an endomorphism (HOMO), injective endomorphism (MONO) or automorphism (ISO)."""
    target_kind = MorphismKind(target_kind)
    g, ok = kernels.extend(G.poset.leq_matrix, G.vc, G.ec, f.assignment(G.n), int(target_kind))
    if not ok:
        return None
    return PartialMap(tuple(enumerate(g.tolist())), target_kind)


def _signature(G: ColoredStructure, v: int):
    others = [u for u in range(G.n) if u != v]
    return (
        int(G.vc[v]),
        int(G.ec[v, v]),
        tuple(sorted(Counter(int(G.ec[v, u]) for u in others).items())),
        tuple(sorted(Counter(int(G.ec[u, v]) for u in others).items())),
    )


def isomorphic(G: ColoredStructure, H: ColoredStructure) -> list[int] | None:
    """Color-exact bijection V(G) -> V(H) as a list, or None."""
    _same_poset(G, H)
    if G.n != H.n or G.directed != H.directed or G.loops != H.loops:
        return None
    sg = [_signature(G, v) for v in range(G.n)]
    sh = [_signature(H, v) for v in range(H.n)]
    if Counter(sg) != Counter(sh):
        return None
    n = G.n
    cand = [[w for w in range(n) if sh[w] == sg[v]] for v in range(n)]
    phi = [-1] * n
    used = [False] * n

    def rec(v):
        if v == n:
            return True
        for w in cand[v]:
            if used[w]:
                continue
            if all(G.ec[v, u] == H.ec[w, phi[u]] and G.ec[u, v] == H.ec[phi[u], w] for u in range(v)):
                phi[v] = w
                used[w] = True
                if rec(v + 1):
                    return True
                used[w] = False
        phi[v] = -1
        return False

    return list(phi) if rec(0) else None
