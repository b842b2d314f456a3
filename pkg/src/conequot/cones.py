"""Exact rational polyhedral cones with a verified double description.

A cone is stored in a canonical form that makes structural equality the
same thing as equality of point sets:

* ``span_equations``: HNF basis of the integral vectors vanishing on the
  cone (so ``dim = ambient_rank - len(span_equations)``),
* ``facet_normals``: primitive inward normals, one per facet, chosen
  orthogonal to the span of ``span_equations`` and sorted,
* ``lineality``: HNF basis of the largest linear subspace inside the cone,
* ``rays``: primitive representatives of the extremal rays modulo the
  lineality space, chosen orthogonal to it and sorted.

Both descriptions are produced by one conversion core (an incremental
double description method with the combinatorial adjacency test) and are
cross-checked on construction: converting the canonical generators back
to inequalities must reproduce the stored constraint system exactly.

Generator-side conventions used throughout the package:

* the zero cone has no rays and no lineality;
* a linear subspace has no rays; its relative interior is the subspace
  itself, so e.g. the origin lies in the relative interior of a line;
* every face of a cone contains its lineality space, hence a full line
  has exactly one face (the line itself).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InternalError
from .lattices import IntVec, hnf, right_kernel

Vec = tuple  # int or Fraction entries


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _neg(v):
    return tuple(-x for x in v)


def _primitive_int(v) -> IntVec | None:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g == 0:
        return None
    return tuple(x // g for x in v)


def _primitive_from_fractions(v) -> IntVec | None:
    denom = 1
    for x in v:
        if isinstance(x, Fraction):
            denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in v]
    return _primitive_int(ints)


def _orthogonalize(rows) -> list[tuple[Fraction, ...]]:
    # Gram-Schmidt over Q; input rows are independent
    out: list[tuple[Fraction, ...]] = []
    for r in rows:
        cur = [Fraction(x) for x in r]
        for o in out:
            coef = _dot(cur, o) / _dot(o, o)
            if coef:
                cur = [c - coef * x for c, x in zip(cur, o)]
        out.append(tuple(cur))
    return out


def _reduce_ray(v, ortho) -> IntVec | None:
    """Primitive representative of v modulo the span of ortho rows."""
    cur = [Fraction(x) for x in v]
    for o in ortho:
        coef = _dot(cur, o) / _dot(o, o)
        if coef:
            cur = [c - coef * x for c, x in zip(cur, o)]
    return _primitive_from_fractions(cur)


def _adjacent(p: IntVec, q: IntVec, rays, seen) -> bool:
    zero = [c for c in seen if _dot(c, p) == 0 and _dot(c, q) == 0]
    for r in rays:
        if r is p or r is q:
            continue
        if all(_dot(c, r) == 0 for c in zero):
            return False
    return True


def _dual_generators(constraints, rank: int) -> tuple[list[IntVec], list[IntVec]]:
    """Generators of ``{a : <a, c> >= 0 for every c in constraints}``.

    Returns ``(lineality_basis, rays)``.  Rays are primitive, reduced
    orthogonal to the lineality span, and exactly the extremal rays of
    the solution cone modulo its lineality.
    """
    basis: list[IntVec] = [
        tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)
    ]
    rays: list[IntVec] = []
    seen: list[IntVec] = []
    for c in constraints:
        c = tuple(c)
        if len(c) != rank:
            raise ValueError("constraint length mismatch")
        if not any(c):
            continue
        bvals = [_dot(c, b) for b in basis]
        if any(bvals):
            # the constraint cuts the current lineality space
            j0 = next(j for j, val in enumerate(bvals) if val)
            b0 = basis[j0] if bvals[j0] > 0 else _neg(basis[j0])
            d0 = abs(bvals[j0])
            new_basis: list[IntVec] = []
            for j, b in enumerate(basis):
                if j == j0:
                    continue
                w = _primitive_int(
                    tuple(d0 * b[i] - bvals[j] * b0[i] for i in range(rank))
                )
                assert w is not None
                new_basis.append(w)
            basis = new_basis
            moved = []
            for r in rays:
                rv = _dot(c, r)
                moved.append(tuple(d0 * r[i] - rv * b0[i] for i in range(rank)))
            moved.append(b0)
            ortho = _orthogonalize(basis)
            reduced = []
            for r in moved:
                rr = _reduce_ray(r, ortho)
                if rr is None:
                    raise InternalError("ray collapsed into lineality")
                reduced.append(rr)
            rays = sorted(set(reduced))
        else:
            vals = [(r, _dot(c, r)) for r in rays]
            neg = [(r, v) for r, v in vals if v < 0]
            if neg:
                pos = [(r, v) for r, v in vals if v > 0]
                new = [r for r, v in vals if v >= 0]
                for p, vp in pos:
                    for q, vq in neg:
                        if _adjacent(p, q, rays, seen):
                            w = _primitive_int(
                                tuple(
                                    vp * q[i] - vq * p[i] for i in range(rank)
                                )
                            )
                            if w is not None:
                                new.append(w)
                rays = sorted(set(new))
        seen.append(c)
    return basis, rays


@dataclass(frozen=True, slots=True)
class Cone:
    """Canonical double description of a rational polyhedral cone.

    Equality and hashing use the generator side (ambient rank, canonical
    rays, lineality basis), which determines the cone as a point set.
    """

    ambient_rank: int
    rays: tuple[IntVec, ...]
    lineality: tuple[IntVec, ...]
    facet_normals: tuple[IntVec, ...] = field(compare=False)
    span_equations: tuple[IntVec, ...] = field(compare=False)
    dim: int = field(compare=False)

    @property
    def generators(self) -> tuple[IntVec, ...]:
        gens = list(self.rays)
        for b in self.lineality:
            gens.append(b)
            gens.append(_neg(b))
        return tuple(gens)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def is_zero(self) -> bool:
        return not self.rays and not self.lineality

    @property
    def sort_key(self):
        return (self.dim, self.lineality, self.rays)

    def __repr__(self) -> str:  # short, deterministic
        parts = [f"dim={self.dim}"]
        if self.rays:
            parts.append("rays=" + ",".join(str(r) for r in self.rays))
        if self.lineality:
            parts.append("lin=" + ",".join(str(b) for b in self.lineality))
        return f"Cone({'; '.join(parts)})"


def _satisfies(v, equations, facets) -> bool:
    return all(_dot(e, v) == 0 for e in equations) and all(
        _dot(a, v) >= 0 for a in facets
    )


@lru_cache(maxsize=None)
def _build_cone(rank: int, rays0: tuple[IntVec, ...]) -> Cone:
    equations = right_kernel(rays0, rank)
    dual_lin, facets_raw = _dual_generators(list(rays0), rank)
    if len(dual_lin) != len(equations):
        raise InternalError("dual lineality rank disagrees with span equations")
    facets = tuple(sorted(facets_raw))

    constraints = []
    for e in equations:
        constraints.append(e)
        constraints.append(_neg(e))
    constraints.extend(facets)
    lin_raw, rays_raw = _dual_generators(constraints, rank)
    lineality = hnf(lin_raw, rank)
    rays = tuple(sorted(set(rays_raw)))

    for r in rays0:
        if not _satisfies(r, equations, facets):
            raise InternalError("input generator violates derived constraints")

    # round trip: canonical generators must reproduce the constraint side
    gens_full = list(rays)
    for b in lineality:
        gens_full.append(b)
        gens_full.append(_neg(b))
    eq_rt = right_kernel(gens_full, rank)
    if eq_rt != equations:
        raise InternalError("round-trip span equations mismatch")
    _, facets_rt = _dual_generators(gens_full, rank)
    if tuple(sorted(facets_rt)) != facets:
        raise InternalError("round-trip facet normals mismatch")

    return Cone(
        ambient_rank=rank,
        rays=rays,
        lineality=lineality,
        facet_normals=facets,
        span_equations=equations,
        dim=rank - len(equations),
    )


def cone_from_generators(ambient_rank: int, generators) -> Cone:
    """Canonical cone spanned by the given integer vectors."""
    if ambient_rank < 0:
        raise ValueError("ambient rank must be nonnegative")
    prim = set()
    for v in generators:
        v = tuple(int(x) for x in v)
        if len(v) != ambient_rank:
            raise ValueError(
                f"generator length {len(v)} != ambient rank {ambient_rank}"
            )
        p = _primitive_int(v)
        if p is not None:
            prim.add(p)
    return _build_cone(ambient_rank, tuple(sorted(prim)))


def cone_from_constraints(ambient_rank: int, equations, inequalities) -> Cone:
    """Canonical cone ``{v : e.v = 0, a.v >= 0}``."""
    constraints = []
    for e in equations:
        e = tuple(int(x) for x in e)
        constraints.append(e)
        constraints.append(_neg(e))
    for a in inequalities:
        constraints.append(tuple(int(x) for x in a))
    lin, rays = _dual_generators(constraints, ambient_rank)
    gens = list(rays)
    for b in lin:
        gens.append(b)
        gens.append(_neg(b))
    return cone_from_generators(ambient_rank, gens)


def contains_point(c: Cone, v) -> bool:
    v = tuple(v)
    if len(v) != c.ambient_rank:
        raise ValueError("vector length mismatch")
    return _satisfies(v, c.span_equations, c.facet_normals)


def relint_contains(c: Cone, v) -> bool:
    """Is v in the relative interior of c?"""
    v = tuple(v)
    if len(v) != c.ambient_rank:
        raise ValueError("vector length mismatch")
    return all(_dot(e, v) == 0 for e in c.span_equations) and all(
        _dot(a, v) > 0 for a in c.facet_normals
    )


def contains_cone(outer: Cone, inner: Cone) -> bool:
    return all(contains_point(outer, g) for g in inner.generators)


def cone_equal(a: Cone, b: Cone) -> bool:
    return a == b


def relint_sample(c: Cone) -> IntVec:
    """An integer point in the relative interior of c.

    The sum of the canonical rays works: the lineality contributes zero
    and the rays sum into the interior of the pointed part.
    """
    return tuple(
        sum(r[i] for r in c.rays) for i in range(c.ambient_rank)
    ) if c.rays else tuple(0 for _ in range(c.ambient_rank))


@lru_cache(maxsize=None)
def _intersect_cached(a: Cone, b: Cone) -> Cone:
    if contains_cone(b, a):
        return a
    if contains_cone(a, b):
        return b
    return cone_from_constraints(
        a.ambient_rank,
        a.span_equations + b.span_equations,
        a.facet_normals + b.facet_normals,
    )


def intersect(a: Cone, b: Cone) -> Cone:
    if a.ambient_rank != b.ambient_rank:
        raise ValueError("ambient rank mismatch")
    if b.sort_key < a.sort_key:
        a, b = b, a
    return _intersect_cached(a, b)


@lru_cache(maxsize=None)
def relints_intersect(a: Cone, b: Cone) -> bool:
    """Do the relative interiors of a and b meet?

    The intersection cone's relative-interior sample witnesses overlap:
    relint(a) and relint(b) meet iff that point is interior to both.
    """
    if a.ambient_rank != b.ambient_rank:
        raise ValueError("ambient rank mismatch")
    p = relint_sample(intersect(a, b))
    return relint_contains(a, p) and relint_contains(b, p)


@lru_cache(maxsize=None)
def _facet_cone(c: Cone, normal: IntVec) -> Cone:
    rest = tuple(a for a in c.facet_normals if a != normal)
    return cone_from_constraints(
        c.ambient_rank, c.span_equations + (normal,), rest
    )


@lru_cache(maxsize=None)
def faces(c: Cone) -> frozenset[Cone]:
    """All faces of c, including c itself.

    Every face contains the lineality space; the zero cone and a full
    linear subspace each have exactly one face.
    """
    out = {c}
    for a in c.facet_normals:
        out |= faces(_facet_cone(c, a))
    return frozenset(out)


@lru_cache(maxsize=None)
def is_face(f: Cone, c: Cone) -> bool:
    """Is f a face of c (c cut by a supporting hyperplane, or c itself)?"""
    if f.ambient_rank != c.ambient_rank:
        raise ValueError("ambient rank mismatch")
    if not contains_cone(c, f):
        return False
    active = tuple(
        a
        for a in c.facet_normals
        if all(_dot(a, g) == 0 for g in f.generators)
    )
    cut = cone_from_constraints(
        c.ambient_rank,
        c.span_equations + active,
        tuple(a for a in c.facet_normals if a not in active),
    )
    return cut == f


def relint_subset(inner: Cone, outer: Cone) -> bool:
    """Is relint(inner) contained in relint(outer)?

    For faces of a common setup this is equivalent to ``inner`` being a
    subset of ``outer`` whose relative interior meets relint(outer).
    """
    return contains_cone(outer, inner) and relints_intersect(inner, outer)
