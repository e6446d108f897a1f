"""Sizes and wall-clock times of the main computations for each n.

For every n up to --max-n prints: |I_n|, Hasse covers of I_n, the number of
(lam, mu) cells, the largest I_n(lam, mu), cells with a broken cover, and the
seconds spent building posets and sweeping the order comparison.

    python scripts/atlas_sweep.py --max-n 6
"""

import argparse
import time

from orbit_atlas.grassmann import (
    all_colorings,
    covering_comparison,
    enumerate_consistent,
    restricted_leq,
)
from orbit_atlas.involutions import melnikov_leq
from orbit_atlas.poset import melnikov_poset


def sweep(n: int) -> dict:
    start = time.perf_counter()
    full = melnikov_poset(n)
    t_poset = time.perf_counter() - start

    start = time.perf_counter()
    cells = largest = broken = 0
    seen = set()
    for _, _, c in all_colorings(n):
        cells += 1
        elements = enumerate_consistent(c)
        largest = max(largest, len(elements))
        for v in elements:
            for w in elements:
                assert restricted_leq(v, w) == melnikov_leq(v.w, w.w)
        if c not in seen:
            seen.add(c)
            broken += bool(covering_comparison(c))
    t_sweep = time.perf_counter() - start
    return {"n": n, "orbits": len(full), "covers": len(full.covers), "cells": cells,
            "largest": largest, "colorings_broken": broken,
            "poset_s": t_poset, "sweep_s": t_sweep}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=6)
    args = parser.parse_args()
    header = f"{'n':>2} {'|I_n|':>6} {'covers':>7} {'cells':>6} {'largest':>8} " \
             f"{'broken':>7} {'poset s':>8} {'sweep s':>8}"
    print(header)
    for n in range(1, args.max_n + 1):
        r = sweep(n)
        print(f"{r['n']:>2} {r['orbits']:>6} {r['covers']:>7} {r['cells']:>6} {r['largest']:>8} "
              f"{r['colorings_broken']:>7} {r['poset_s']:>8.3f} {r['sweep_s']:>8.3f}")


if __name__ == "__main__":
    main()
