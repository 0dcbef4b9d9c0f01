"""JSON documents for structures.

Structure document::

    {"poset": {"elements": [...], "covers": [[lo, hi], ...]} | "m2",
     "directed": false, "loops": false,
     "vertices": [{"name": "a", "color": "r"}, ...],
     "edges": [{"u": "a", "v": "c", "color": "r"}, ...]}

Omitted pairs are bottom.  Diagonal entries need ``"loops": true``; an
undirected structure lists each unordered pair at most once.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .errors import BadColorError, HomHomError, LoopError
from .poset import Poset, build_poset, named_poset
from .structure import ColoredStructure


class FormatError(HomHomError):
    pass


def poset_from_json(doc: Any) -> Poset:
    if isinstance(doc, str):
        return named_poset(doc)
    try:
        return build_poset(doc["elements"], [tuple(c) for c in doc.get("covers", [])])
    except (TypeError, KeyError) as e:
        raise FormatError(f"bad poset description: {e}") from None


def structure_from_json(doc: dict) -> ColoredStructure:
    if not isinstance(doc, dict):
        raise FormatError("structure document must be a JSON object")
    try:
        poset = poset_from_json(doc["poset"])
        directed = bool(doc.get("directed", False))
        loops = bool(doc.get("loops", False))
        verts = doc["vertices"]
        names = [v["name"] for v in verts]
        pos = {name: i for i, name in enumerate(names)}
        if len(pos) != len(names):
            raise FormatError("duplicate vertex name")

        def color(c):
            try:
                return poset.index(c)
            except KeyError as e:
                raise BadColorError(str(e)) from None

        vc = [color(v.get("color", poset.elements[poset.bottom])) for v in verts]
        n = len(names)
        ec = np.full((n, n), poset.bottom, dtype=np.int64)
        seen = set()
        for e in doc.get("edges", []):
            u, v = pos[e["u"]], pos[e["v"]]
            if u == v and not loops:
                raise LoopError(f"loop at {e['u']!r} but \"loops\" is false")
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in seen:
                raise FormatError(f"pair ({e['u']!r}, {e['v']!r}) listed twice")
            seen.add(key)
            ec[u, v] = color(e["color"])
            if not directed:
                ec[v, u] = ec[u, v]
    except KeyError as e:
        raise FormatError(f"missing or unknown key {e}") from None
    except TypeError as e:
        raise FormatError(str(e)) from None
    return ColoredStructure(poset, vc, ec, directed=directed, loops=loops, names=names)


def structure_to_json(G: ColoredStructure) -> dict:
    return {
        "poset": G.poset.to_json(),
        "directed": G.directed,
        "loops": G.loops,
        "vertices": [{"name": G.names[v], "color": G.color(v)} for v in range(G.n)],
        "edges": [{"u": u, "v": v, "color": c} for u, v, c in G.colored_pairs()],
    }


def loads(text: str) -> ColoredStructure:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
    return structure_from_json(doc)


def dumps(G: ColoredStructure, **kw) -> str:
    return json.dumps(structure_to_json(G), **kw)


def load(path) -> ColoredStructure:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())

