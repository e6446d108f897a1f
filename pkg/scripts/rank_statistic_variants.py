"""Compare two readings of the restricted rank statistic against the Melnikov order.

"inside":  arcs (a, b) with i <= a < b <= j   (arcs contained in [i, j])
"literal": arcs (a, b) with i <= a < j <= b   (arcs starting in [i, j) and ending at or after j)

For each n, prints how many (lam, mu) cells have a restricted order that
agrees with melnikov_leq on I_n(lam, mu) under each reading, plus the first
disagreement found.

    python scripts/rank_statistic_variants.py --max-n 6
"""

import argparse

from orbit_atlas.grassmann import all_colorings, enumerate_consistent
from orbit_atlas.involutions import melnikov_leq

READINGS = {
    "inside": lambda arcs, i, j: sum(1 for a, b in arcs if i <= a and b <= j),
    "literal": lambda arcs, i, j: sum(1 for a, b in arcs if i <= a < j <= b),
}


def leq(stat, c, v, w):
    return all(stat(v.arcs, i, j) <= stat(w.arcs, i, j) for i, j in c.black_white_pairs())


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=6)
    args = parser.parse_args()
    for name, stat in READINGS.items():
        for n in range(1, args.max_n + 1):
            seen, agree, first = set(), 0, None
            for lam, mu, c in all_colorings(n):
                if c in seen:
                    continue
                seen.add(c)
                elements = [cw.w for cw in enumerate_consistent(c)]
                bad = [(v, w) for v in elements for w in elements
                       if leq(stat, c, v, w) != melnikov_leq(v, w)]
                if bad:
                    first = first or (c, *bad[0])
                else:
                    agree += 1
            line = f"{name:>8} n={n}: {agree}/{len(seen)} colorings agree"
            if first:
                c, v, w = first
                line += f"; first mismatch coloring={c} v={v} w={w}"
            print(line)


if __name__ == "__main__":
    main()
