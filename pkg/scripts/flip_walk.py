"""Random walk in the tilting graph, printing each flip and the sheaf labels.

Example:
    python3 scripts/flip_walk.py --p 2 --q 3 --steps 8 --seed 5
"""

import argparse
import random

from arcsheaf import (
    InputError,
    LambdaVertex,
    Weight,
    bundle_nf,
    flip,
    flippable_count,
    iota,
    phi,
    vertex_to_tilting,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--steps", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--c1", type=int, default=0, help="starting vertex is (c1, c1, ...)")
    args = ap.parse_args()

    wt = Weight(args.p, args.q)
    rng = random.Random(args.seed)
    v = LambdaVertex(wt, (args.c1,) * wt.p)
    t = vertex_to_tilting(v).triangulation()
    print(f"start at vertex {v}:")
    for arc in t.arcs:
        print(f"  {arc}  ->  {phi(arc)}")

    for step in range(1, args.steps + 1):
        arc = rng.choice(t.arcs)
        t, new = flip(t, arc)
        line = f"step {step}: flip {arc} -> {new}   [{phi(arc)} -> {phi(new)}]"
        try:
            nf = bundle_nf(t)
        except InputError:
            print(line)
            continue
        bits = "".join(map(str, iota(nf)))
        print(f"{line}   bundle, vertex {nf.vertex}, iota {bits}, n {flippable_count(nf)}")


if __name__ == "__main__":
    main()
