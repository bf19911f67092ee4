"""Count square / pentagon / parallel-pair frequencies for random flip pairs.

For two arcs of a triangulation the flip replacements cross 0, 1 or 2 times in
total; the first two cases satisfy the square resp. pentagon relation, the
third (the two arcs cobound two triangles) satisfies neither and the composed
flips slide forever.  This script measures how often each case shows up.

Example:
    python3 scripts/relation_census.py --draws 500 --seed 1
"""

import argparse
import random

from arcsheaf import Weight, flip, pos_int, random_triangulation

TYPES = ((1, 2), (2, 2), (2, 3), (3, 3), (3, 4), (2, 5), (4, 4))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--draws", type=int, default=500, help="draws per weight type")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'type':>6}  {'square':>7} {'pentagon':>9} {'parallel':>9}")
    totals = [0, 0, 0]
    for p, q in TYPES:
        wt = Weight(p, q)
        counts = [0, 0, 0]
        for _ in range(args.draws):
            t = random_triangulation(wt, rng)
            i, j = rng.sample(range(len(t.arcs)), 2)
            _, gi = flip(t, t.arcs[i])
            _, gj = flip(t, t.arcs[j])
            shared = pos_int(gi, gj) + pos_int(gj, gi)
            counts[shared] += 1
        print(f" ({p},{q})  {counts[0]:>7} {counts[1]:>9} {counts[2]:>9}")
        for k in range(3):
            totals[k] += counts[k]
    n = sum(totals)
    print(
        f" total  {totals[0]:>7} {totals[1]:>9} {totals[2]:>9}"
        f"   (parallel rate {totals[2] / n:.1%})"
    )


if __name__ == "__main__":
    main()
