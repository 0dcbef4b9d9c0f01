"""Census: enumerate isomorphism classes, profile each, cross-check the structural oracles."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import kernels
from .catalog import DEFAULT_CAP, Constraints, encode, enumerate_structures
from .classify import (
    check_chain_necessary,
    check_color1_structure,
    classify_chain,
    classify_diamond_vertex_uniform,
    find_pump_config,
    recognize_gardiner,
)
from .decider import CLASS_NAMES, hierarchy_profile
from .plain import lower
from .poset import Poset, Shape
from .structure import ColoredStructure


@dataclass
class CensusReport:
    parameters: dict
    structures: int = 0
    counts: dict = field(default_factory=dict)
    mh_not_hh: list = field(default_factory=list)
    profiles: list = field(default_factory=list)
    disagreements: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return asdict(self)


def _edges(G: ColoredStructure) -> list:
    return [[u, v, c] for u, v, c in G.colored_pairs()]


def analyze(G: ColoredStructure, budget: int | None = None) -> dict:
    """Profile one structure and run every applicable structural check against it."""
    prof = hierarchy_profile(G, budget)
    mh, hh, ii = prof.member("MH"), prof.member("HH"), prof.member("II")
    rec = {
        "code": list(encode(G)),
        "vertex_colors": [G.color(v) for v in range(G.n)],
        "edges": _edges(G),
        "profile": {c: prof.member(c) for c in CLASS_NAMES},
        "consistent": prof.consistent,
    }
    bad = []
    if not prof.consistent:
        bad.append({"check": "hierarchy", "detail": "inclusion between classes violated"})
    simple = not G.directed and not G.loops
    if simple:
        pump = find_pump_config(G)
        rec["pump"] = None if pump is None else pump.named(G)
        if pump is not None and mh is True:
            bad.append({"check": "pump", "detail": "pump configuration in an MH structure"})
        shape = G.poset.shape()
        if shape is Shape.CHAIN:
            cl = classify_chain(G)
            nec = check_chain_necessary(G)
            rec["classifier"] = {"name": "chain", **cl.to_json(G)}
            rec["chain_necessary"] = len(nec)
            for name, v in (("MH", mh), ("HH", hh)):
                if v is not None and v != cl.member:
                    bad.append({"check": "chain", "detail": f"classifier says {cl.member}, {name} says {v}"})
            if nec and mh is True:
                bad.append({"check": "chain-necessary", "detail": f"{len(nec)} violations in an MH structure"})
        elif shape is Shape.DIAMOND and G.is_vertex_uniform():
            cl = classify_diamond_vertex_uniform(G)
            rec["classifier"] = {"name": "diamond", **cl.to_json(G)}
            for name, v in (("MH", mh), ("HH", hh)):
                if v is not None and v != cl.member:
                    bad.append({"check": "diamond", "detail": f"classifier says {cl.member}, {name} says {v}"})
        if G.is_vertex_uniform() and np.any(G.ec == G.poset.top) and G.poset.top != G.poset.bottom:
            viol = check_color1_structure(G)
            rec["color1_violations"] = len(viol)
            if viol and mh is True:
                bad.append({"check": "color1", "detail": f"{len(viol)} violations in an MH structure"})
        if G.is_plain():
            tag = recognize_gardiner(lower(G))
            rec["gardiner"] = None if tag is None else str(tag)
            if ii is not None and (tag is not None) != ii:
                bad.append({"check": "gardiner", "detail": f"recognizer says {tag}, II says {ii}"})
    rec["disagreements"] = bad
    return rec


def _analyze_star(args):
    return analyze(*args)


def run_census(
    poset: Poset,
    n: int,
    directed: bool = False,
    loops: bool = False,
    constraints: Constraints | None = None,
    budget: int | None = None,
    jobs: int = 1,
    cap: int = DEFAULT_CAP,
    keep_profiles: bool = True,
    poset_name: str | None = None,
) -> CensusReport:
    c = constraints or Constraints()
    report = CensusReport(
        parameters={
            "poset": poset_name or poset.to_json(),
            "n": n,
            "directed": directed,
            "loops": loops,
            "constraints": asdict(c),
            "max_maps": budget,
        }
    )
    report.counts = {name: {"member": 0, "nonmember": 0, "unknown": 0} for name in CLASS_NAMES}
    t0 = time.perf_counter()
    structures = enumerate_structures(poset, n, directed, loops, c, cap)
    work = ((G, budget) for G in structures)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            records = list(pool.map(_analyze_star, work, chunksize=32))
    else:
        records = [analyze(G, budget) for G, budget in work]
    for i, rec in enumerate(records):
        rec["index"] = i
        for name, m in rec["profile"].items():
            key = "member" if m is True else "nonmember" if m is False else "unknown"
            report.counts[name][key] += 1
        if rec["profile"]["MH"] is True and rec["profile"]["HH"] is False:
            report.mh_not_hh.append(i)
        for d in rec["disagreements"]:
            report.disagreements.append({"index": i, **d})
    report.structures = len(records)
    if keep_profiles:
        report.profiles = records
    report.timing = {"seconds": round(time.perf_counter() - t0, 3), "backend": kernels.backend(), "jobs": jobs}
    return report
