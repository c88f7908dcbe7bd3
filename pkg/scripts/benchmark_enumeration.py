#!/usr/bin/env python3
"""Compare the compiled and pure-Python enumeration backends.

Runs the same searches on both backends, checks that the results are
identical, and reports best-of-N wall times with the speedup factor.
The compiled kernel is optional at build time, so this script is also the
quickest way to see whether it is active in the current environment.

Two kinds of rows:

  enumerate  full enumerate_simplicial_maps() call, map objects included
  spectrum   degree_spectrum() call, lean vector-level degree tally

The compiled kernel accelerates the backtracking search itself; result
materialization and the degree tally are shared Python code, so speedups
are most visible on searches whose tree is large relative to the output.
"""

from __future__ import annotations

import argparse
import time

from surfacemaps import (
    available_backends,
    build_sum_low,
    degree_spectrum,
    enumerate_simplicial_maps,
    EnumerationCaps,
    sigma2_10v,
    tetrahedron,
    torus7,
)


def cases(full: bool):
    torus = torus7()
    plain = EnumerationCaps()
    yield "enumerate", "tetrahedron -> torus7", tetrahedron(), torus, plain
    yield "enumerate", "torus7 -> torus7", torus, torus, plain
    yield "spectrum", "torus7 -> torus7", torus, torus, plain
    yield "spectrum", "sigma2_10v -> torus7", sigma2_10v().surface, torus, plain
    if full:
        eleven = build_sum_low(2, 1).surface
        wide = EnumerationCaps(max_domain_vertices=11, max_codomain_vertices=7)
        yield "spectrum", "sum_low(2,1) -> torus7", eleven, torus, wide


def run(repeats: int, full: bool) -> int:
    if "compiled" not in available_backends():
        print("compiled backend not built; nothing to compare")
        return 1
    rows = list(cases(full))
    width = max(len(name) for _, name, *_ in rows)
    print(f"{'mode':<9}  {'case':<{width}}  {'maps':>8}  {'python':>9}  {'compiled':>9}  speedup")
    for mode, name, dom, cod, caps in rows:
        timings = {}
        results = {}
        for backend in ("python", "compiled"):
            best = float("inf")
            for _ in range(repeats):
                t0 = time.perf_counter()
                if mode == "enumerate":
                    out = enumerate_simplicial_maps(dom, cod, caps, backend=backend)
                    key = (len(out), out)
                else:
                    rep = degree_spectrum(dom, cod, caps, backend=backend)
                    key = (rep.total_maps, rep)
                best = min(best, time.perf_counter() - t0)
            timings[backend] = best
            results[backend] = key
        if results["python"] != results["compiled"]:
            print(f"{mode} {name}: BACKEND MISMATCH")
            return 1
        n = results["python"][0]
        py, cy = timings["python"], timings["compiled"]
        print(f"{mode:<9}  {name:<{width}}  {n:>8}  {py:>8.3f}s  {cy:>8.3f}s  {py / cy:>6.1f}x")
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(
        description="benchmark the enumeration backends against each other"
    )
    parser.add_argument("--repeats", type=int, default=1, help="take the best of N runs")
    parser.add_argument(
        "--full", action="store_true", help="include the slow 11-vertex domain case"
    )
    args = parser.parse_args()
    return run(args.repeats, args.full)


if __name__ == "__main__":
    raise SystemExit(main())
