#!/usr/bin/env python3
"""Survey random pointed gradings and tabulate classification statistics.

Draws random suitable-mode weight matrices whose degrees lie in an open
half-space (so the grading is pointed), classifies each, and reports how
the number of interior embeddings and their geometry verdicts are
distributed.

Usage: python scripts/survey_random_gradings.py [--count N] [--rank K]
       [--max-gens R] [--seed S]
"""

from __future__ import annotations

import argparse
import random
from collections import Counter

from conequot import classify, make_grading_input
from conequot.errors import InputError


def random_pointed_grading(rng: random.Random, rank: int, max_gens: int):
    """Degrees with positive last coordinate: pointed and faithful-ish."""
    r = rng.randint(rank, max_gens)
    gens = []
    for i in range(r):
        vec = tuple(rng.randint(-3, 3) for _ in range(rank - 1)) + (
            rng.randint(1, 3),
        )
        gens.append((f"g{i + 1}", vec))
    return make_grading_input(rank, gens, "suitable", None)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--rank", type=int, default=2)
    ap.add_argument("--max-gens", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    interior_hist: Counter[int] = Counter()
    verdicts: Counter[str] = Counter()
    skipped = 0
    for _ in range(args.count):
        gi = random_pointed_grading(rng, args.rank, args.max_gens)
        try:
            res = classify(gi)
        except InputError:
            skipped += 1  # not faithful, or facet condition fails
            continue
        interior_hist[len(res.interior)] += 1
        for g in res.geometry:
            key = (
                ("lf" if g.locally_factorial else "sing")
                + "/"
                + ("qf" if g.q_factorial else "nqf")
                + "/"
                + ("qp" if g.quasiprojective else "nqp")
            )
            verdicts[key] += 1

    print(f"classified {args.count - skipped} of {args.count} random gradings "
          f"(rank {args.rank}, <= {args.max_gens} generators, seed {args.seed})")
    print("interior embeddings per input:")
    for n in sorted(interior_hist):
        print(f"  {n:3d}: {interior_hist[n]}")
    print("geometry verdicts across all embeddings:")
    for key in sorted(verdicts):
        print(f"  {key:12s}: {verdicts[key]}")


if __name__ == "__main__":
    main()
