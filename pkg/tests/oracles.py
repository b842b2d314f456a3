"""Independent brute-force reference implementations used by the tests.

These deliberately avoid the library's enumeration strategies: cliques by
raw subset scanning, GIT fans by evaluating kappa over an integer grid,
faces by cutting with every facet-normal subset.
"""

from __future__ import annotations

import itertools
import random

from conequot import (
    cone_from_constraints,
    contains_point,
    git_cone,
    intersect,
    make_grading_input,
    relints_intersect,
)


def brute_force_cliques(om):
    """All maximal pairwise-overlapping subsets, by scanning every subset."""
    cones = om.cones
    n = len(cones)
    assert n <= 14, "subset oracle only meant for small inputs"
    cliques = []
    for mask in range(1, 1 << n):
        members = [i for i in range(n) if mask >> i & 1]
        if all(
            relints_intersect(cones[i], cones[j])
            for i, j in itertools.combinations(members, 2)
        ):
            cliques.append(frozenset(members))
    maximal = {
        c for c in cliques if not any(c < d for d in cliques)
    }
    return {frozenset(cones[i] for i in c) for c in maximal}


def grid_git_fan(om):
    """Every kappa(u) for u on an integer grid covering all arrangement cells.

    Valid for ambient rank <= 2: there, every cone of the fan has its rays
    among the (+/-) primitive degree directions, so a box of twice the
    largest coordinate contains a lattice point of every cell's relative
    interior (sums of at most two bounding rays).
    """
    rank = om.ambient_rank
    assert rank <= 2
    bound = 2 * max(
        (abs(x) for c in om.cones for r in c.rays for x in r), default=1
    ) + 2
    if rank == 1:
        points = [(v,) for v in range(-bound, bound + 1)]
    else:
        points = [
            (x, y)
            for x in range(-bound, bound + 1)
            for y in range(-bound, bound + 1)
        ]
    seen = set()
    for u in points:
        if contains_point(om.generic, u):
            seen.add(git_cone(om, u))
    return seen


def brute_faces(c):
    """Faces of a cone by intersecting with every subset of facet normals."""
    out = set()
    normals = c.facet_normals
    for k in range(len(normals) + 1):
        for subset in itertools.combinations(normals, k):
            face = c
            for a in subset:
                face = intersect(
                    face, cone_from_constraints(c.ambient_rank, (a,), ())
                )
            out.add(face)
    return out


def random_pointed_grading(rng: random.Random, max_rank=2, max_gens=10):
    """Faithful pointed suitable grading with small entries, or None."""
    rank = rng.randint(1, max_rank)
    r = rng.randint(rank, max_gens)
    gens = []
    for i in range(r):
        vec = tuple(rng.randint(-2, 2) for _ in range(rank - 1)) + (
            rng.randint(1, 2),
        )
        gens.append((f"g{i + 1}", vec))
    return make_grading_input(rank, gens, "suitable", None)
