"""Finite bounded posets carrying the vertex and edge colors."""

from __future__ import annotations

import enum
from typing import Hashable, Iterable, Sequence

import numpy as np

from .errors import CycleError, NoBoundError


class Shape(enum.Enum):
    CHAIN = "chain"
    DIAMOND = "diamond"
    OTHER = "other"


class Poset:
    """A bounded partial order on named elements.

    ``leq_matrix[i, j]`` is true iff element ``i`` lies below element ``j``.
    Instances are immutable; build them with :func:`build_poset`.
    """

    __slots__ = ("elements", "leq_matrix", "bottom", "top", "_index")

    def __init__(self, elements: Sequence[Hashable], leq_matrix: np.ndarray, bottom: int, top: int):
        self.elements = tuple(elements)
        m = np.array(leq_matrix, dtype=np.bool_)
        m.setflags(write=False)
        self.leq_matrix = m
        self.bottom = bottom
        self.top = top
        self._index = {e: i for i, e in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.leq_matrix, other.leq_matrix)

    def __hash__(self):
        return hash((self.elements, self.leq_matrix.tobytes()))

    def __repr__(self):
        return f"Poset({list(self.elements)!r}, covers={self.covers()!r})"

    def index(self, name: Hashable) -> int:
        try:
            return self._index[name]
        except KeyError:
            # JSON round trips turn integer names into strings and back
            for e, i in self._index.items():
                if str(e) == str(name):
                    return i
            raise KeyError(f"{name!r} is not an element of {list(self.elements)}") from None

    def name(self, i: int) -> Hashable:
        return self.elements[i]

    def leq(self, a: Hashable, b: Hashable) -> bool:
        return bool(self.leq_matrix[self.index(a), self.index(b)])

    def lt(self, a: Hashable, b: Hashable) -> bool:
        i, j = self.index(a), self.index(b)
        return i != j and bool(self.leq_matrix[i, j])

    def comparable(self, i: int, j: int) -> bool:
        return bool(self.leq_matrix[i, j] or self.leq_matrix[j, i])

    def middles(self) -> list[int]:
        """Indices other than bottom and top, in element order."""
        return [i for i in range(len(self)) if i not in (self.bottom, self.top)]

    def shape(self) -> Shape:
        m = self.leq_matrix
        if np.all(m | m.T):
            return Shape.CHAIN
        mid = self.middles()
        if all(not self.comparable(i, j) for i in mid for j in mid if i != j):
            return Shape.DIAMOND
        return Shape.OTHER

    def covers(self) -> list[tuple[Hashable, Hashable]]:
        """Hasse diagram edges (lower, upper)."""
        m = self.leq_matrix
        k = len(self)
        out = []
        for a in range(k):
            for b in range(k):
                if a == b or not m[a, b]:
                    continue
                if any(c not in (a, b) and m[a, c] and m[c, b] for c in range(k)):
                    continue
                out.append((self.elements[a], self.elements[b]))
        return out

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "covers": [list(c) for c in self.covers()]}


def build_poset(element_names: Iterable[Hashable], cover_pairs: Iterable[tuple[Hashable, Hashable]]) -> Poset:
    names = list(element_names)
    if len(set(names)) != len(names):
        raise ValueError("element names must be unique")
    if not names:
        raise NoBoundError("empty poset has no bounds")
    idx = {e: i for i, e in enumerate(names)}
    k = len(names)
    m = np.eye(k, dtype=np.bool_)
    for lo, hi in cover_pairs:
        if lo not in idx or hi not in idx:
            raise KeyError(f"cover ({lo!r}, {hi!r}) names an unknown element")
        m[idx[lo], idx[hi]] = True
    # Warshall closure
    for c in range(k):
        m |= m[:, c : c + 1] & m[c : c + 1, :]
    both = m & m.T
    if np.any(both & ~np.eye(k, dtype=np.bool_)):
        i, j = np.argwhere(both & ~np.eye(k, dtype=np.bool_))[0]
        raise CycleError(f"{names[i]!r} and {names[j]!r} lie below each other")
    bottoms = np.flatnonzero(m.all(axis=1))
    tops = np.flatnonzero(m.all(axis=0))
    if len(bottoms) != 1:
        raise NoBoundError("no least element")
    if len(tops) != 1:
        raise NoBoundError("no greatest element")
    return Poset(names, m, int(bottoms[0]), int(tops[0]))


def chain(k: int) -> Poset:
    """Chain 0 < m1 < ... < 1 with ``k`` elements."""
    if k < 2:
        raise ValueError("a chain needs at least 2 elements")
    if k == 2:
        names = ["0", "1"]
    elif k == 3:
        names = ["0", "m", "1"]
    else:
        names = ["0"] + [f"m{i}" for i in range(1, k - 1)] + ["1"]
    return build_poset(names, list(zip(names, names[1:])))


def diamond(middle: Sequence[str]) -> Poset:
    names = ["0", *middle, "1"]
    covers = [("0", x) for x in middle] + [(x, "1") for x in middle]
    return build_poset(names, covers)


NAMED = {
    "chain2": lambda: chain(2),
    "chain3": lambda: chain(3),
    "m2": lambda: diamond(["b", "r"]),
    "m3": lambda: diamond(["a", "b", "c"]),
}


def named_poset(name: str) -> Poset:
    try:
        return NAMED[name]()
    except KeyError:
        raise KeyError(f"unknown poset {name!r}; choose from {sorted(NAMED)}") from None


def leq(p: Poset, a: Hashable, b: Hashable) -> bool:
    return p.leq(a, b)


def shape(p: Poset) -> Shape:
    return p.shape()
