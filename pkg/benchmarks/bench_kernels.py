"""Compare the numba and numpy kernel backends on representative decisions.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Each case is run once untimed per backend (numba compiles on first use), then
timed ``--repeat`` times; the best time is reported.
"""

import argparse
import time

import networkx as nx

from homhom import kernels
from homhom.catalog import Constraints, enumerate_structures, example1, fig6, fig7
from homhom.decider import decide
from homhom.plain import lift, line_graph_k33
from homhom.poset import named_poset


def census_m2(n):
    for G in enumerate_structures(named_poset("m2"), n, constraints=Constraints(vertex_uniform=True)):
        decide(G, "MH")


CASES = {
    "example1 HH": lambda: decide(example1(), "HH"),
    "fig6(3) MH": lambda: decide(fig6(3), "MH"),
    "fig7(1) MH": lambda: decide(fig7(1), "MH"),
    "C6 II": lambda: decide(lift(nx.cycle_graph(6)), "II"),
    "L(K3,3) II": lambda: decide(lift(line_graph_k33()), "II"),
    "m2 vertex-uniform n=4 MH": lambda: census_m2(4),
}
QUICK = ("example1 HH", "fig6(3) MH", "C6 II")


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the slow cases")
    args = ap.parse_args()

    names = QUICK if args.quick else list(CASES)
    backends = kernels.available()
    results = {}
    for b in backends:
        with kernels.using(b):
            for name in names:
                CASES[name]()  # warm-up
                results[name, b] = best_of(CASES[name], args.repeat)

    print(f"{'case':<28}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for name in names:
        row = f"{name:<28}" + "".join(f"{results[name, b]:>11.4f}s" for b in backends)
        if len(backends) == 2:
            row += f"{results[name, 'numpy'] / results[name, 'numba']:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
