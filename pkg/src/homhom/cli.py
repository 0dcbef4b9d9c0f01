"""Command-line interface.

Exit status: 0 member / success, 1 non-member (or census disagreements),
2 unknown (budget exhausted), 3 outside the scope of the structural theorems,
4 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kernels
from .catalog import DEFAULT_CAP, Constraints, make_example, search_mh_not_hh
from .census import run_census
from .classify import classify_chain, classify_diamond_vertex_uniform, find_pump_config
from .decider import CLASS_NAMES, decide, hierarchy_profile
from .errors import FlagError, HomHomError, ShapeError
from .jsonio import load, structure_to_json
from .poset import Shape, named_poset

EXIT_MEMBER, EXIT_NONMEMBER, EXIT_UNKNOWN, EXIT_SCOPE, EXIT_INPUT = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _emit(doc, out=None):
    text = json.dumps(doc, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _status(member):
    return EXIT_MEMBER if member is True else EXIT_NONMEMBER if member is False else EXIT_UNKNOWN


def cmd_decide(args) -> int:
    G = load(args.file)
    v = decide(G, args.cls, args.max_maps)
    _emit(v.to_json(G))
    return _status(v.member)


def cmd_profile(args) -> int:
    G = load(args.file)
    _emit(hierarchy_profile(G, args.max_maps).to_json(G))
    return EXIT_MEMBER


def cmd_pump(args) -> int:
    G = load(args.file)
    cfg = find_pump_config(G)
    _emit({"pump": None if cfg is None else cfg.named(G)})
    return EXIT_MEMBER


def cmd_classify(args) -> int:
    G = load(args.file)
    try:
        G.require_simple()
    except FlagError:
        raise ShapeError("classification theorems cover undirected loopless structures only") from None
    shape = G.poset.shape()
    if shape is Shape.CHAIN:
        name, res = "chain", classify_chain(G)
    elif shape is Shape.DIAMOND:
        if not G.is_vertex_uniform():
            raise ShapeError("diamond-colored structures that are not vertex-uniform are unclassified")
        name, res = "diamond-vertex-uniform", classify_diamond_vertex_uniform(G)
    else:
        raise ShapeError(f"no classification for posets of shape {shape.value}")
    _emit({"classifier": name, **res.to_json(G)})
    return _status(res.member)


def _constraints(args) -> Constraints:
    split = lambda s: tuple(x for x in s.split(",") if x) if s else None  # noqa: E731
    return Constraints(
        vertex_uniform=args.vertex_uniform,
        vertex_colors=split(args.vertex_colors),
        edge_colors=split(args.edge_colors),
        plain=args.plain,
    )


def cmd_census(args) -> int:
    poset = named_poset(args.poset)
    sizes = range(1, args.n + 1) if args.up_to else [args.n]
    reports = []
    for n in sizes:
        r = run_census(
            poset,
            n,
            args.directed,
            args.loops,
            _constraints(args),
            budget=args.max_maps,
            jobs=args.jobs,
            cap=args.cap,
            keep_profiles=not args.no_profiles,
            poset_name=args.poset,
        )
        reports.append(r.to_json())
    _emit(reports[0] if len(reports) == 1 else reports, args.output)
    return EXIT_NONMEMBER if any(r["disagreements"] for r in reports) else EXIT_MEMBER


def cmd_search(args) -> int:
    poset = named_poset(args.poset)
    found = search_mh_not_hh(poset, args.n, args.directed, args.loops, _constraints(args), args.cap, args.max_maps)
    docs = [structure_to_json(G) for G in found]
    _emit({"poset": args.poset, "n": args.n, "directed": args.directed, "loops": args.loops, "found": len(docs), "structures": docs})
    return EXIT_MEMBER


def cmd_example(args) -> int:
    params = {k: v for k, v in vars(args).items() if k in ("n", "alpha", "beta", "poset", "family", "k", "code") and v is not None}
    _emit(structure_to_json(make_example(args.name, **params)))
    return EXIT_MEMBER


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="homhom", description=__doc__.splitlines()[0])
    ap.add_argument("--backend", choices=kernels.available(), help="kernel backend (default from HOMHOM_NO_NUMBA)")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decide", help="decide membership in one class XY")
    p.add_argument("file")
    p.add_argument("cls", metavar="CLASS", choices=CLASS_NAMES)
    p.add_argument("--max-maps", type=int, default=None)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("profile", help="all nine class verdicts")
    p.add_argument("file")
    p.add_argument("--max-maps", type=int, default=None)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("pump", help="find a pump configuration")
    p.add_argument("file")
    p.set_defaults(func=cmd_pump)

    p = sub.add_parser("classify", help="structural MH/HH classification (chain, vertex-uniform diamond)")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    def enum_opts(p):
        p.add_argument("--poset", default="chain2", help="chain2, chain3, m2 or m3")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--directed", action="store_true")
        p.add_argument("--loops", action="store_true")
        p.add_argument("--plain", action="store_true", help="all vertex colors bottom")
        p.add_argument("--vertex-uniform", action="store_true")
        p.add_argument("--vertex-colors", help="comma-separated allowed vertex colors")
        p.add_argument("--edge-colors", help="comma-separated allowed edge colors")
        p.add_argument("--max-maps", type=int, default=None)
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max labeled structures to scan")

    p = sub.add_parser("census", help="enumerate classes, profile and cross-check")
    enum_opts(p)
    p.add_argument("--up-to", action="store_true", help="run every size 1..n")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-profiles", action="store_true")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("search", help="structures that are MH but not HH")
    enum_opts(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("example", help="emit a cataloged structure")
    p.add_argument("name", help="example1, fig6, fig7, uniform, gardiner, plain")
    p.add_argument("--n", type=int)
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--poset")
    p.add_argument("--family")
    p.add_argument("--k", type=int)
    p.add_argument("--code", help="graph6 string for 'plain'")
    p.set_defaults(func=cmd_example)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.backend:
        kernels.set_backend(args.backend)
    try:
        return args.func(args)
    except ShapeError as e:
        print(f"homhom: outside classified scope: {e}", file=sys.stderr)
        return EXIT_SCOPE
    except (HomHomError, KeyError, ValueError, OSError) as e:
        print(f"homhom: error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
