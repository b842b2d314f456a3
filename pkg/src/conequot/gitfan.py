"""GIT cones and the GIT fan of an orbit-cone set.

The GIT cone of a weight ``u`` inside the weight cone is the
intersection of all orbit cones containing ``u``.  The set of all GIT
cones is a fan covering the weight cone; its maximal members are the
chambers.  The fan is computed by closing the orbit-cone set under
pairwise intersection (every GIT cone is such an intersection), taking a
relative-interior sample point of each member of the closure, and
evaluating the GIT cone at each sample.  Fan axioms and sample
self-consistency are verified before returning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cones import (
    Cone,
    contains_cone,
    contains_point,
    intersect,
    is_face,
    relint_contains,
    relint_sample,
)
from .errors import DomainError, InternalError
from .grading import OrbitConeSet


@dataclass(frozen=True, slots=True)
class GitFan:
    """All GIT cones of a weight datum.

    ``chambers`` are the members maximal under inclusion; ``interior``
    are those whose relative interior lies in the relative interior of
    the weight cone.
    """

    cones: tuple[Cone, ...]
    chambers: tuple[Cone, ...]
    interior: tuple[Cone, ...]
    generic: Cone


def git_cone(om: OrbitConeSet, point) -> Cone:
    """Intersection of all orbit cones containing the point."""
    pt = tuple(point)
    if not contains_point(om.generic, pt):
        raise DomainError(f"point {pt} lies outside the weight cone")
    result: Cone | None = None
    for w in om.cones:
        if contains_point(w, pt):
            result = w if result is None else intersect(result, w)
    assert result is not None  # the generic cone contains pt
    return result


def git_fan(om: OrbitConeSet) -> GitFan:
    closure: set[Cone] = set(om.cones)
    work = sorted(om.cones, key=lambda c: c.sort_key)
    while work:
        c = work.pop()
        for w in om.cones:
            x = intersect(c, w)
            if x not in closure:
                closure.add(x)
                work.append(x)

    seen_patterns: set[frozenset[int]] = set()
    fan_cones: set[Cone] = set()
    for c in sorted(closure, key=lambda c: c.sort_key):
        p = relint_sample(c)
        pattern = frozenset(
            i for i, w in enumerate(om.cones) if contains_point(w, p)
        )
        if pattern in seen_patterns:
            continue
        seen_patterns.add(pattern)
        kappa: Cone | None = None
        for i in pattern:
            w = om.cones[i]
            kappa = w if kappa is None else intersect(kappa, w)
        assert kappa is not None
        fan_cones.add(kappa)

    cones = tuple(sorted(fan_cones, key=lambda c: c.sort_key))

    for kappa in cones:
        if git_cone(om, relint_sample(kappa)) != kappa:
            raise InternalError("GIT cone not reproduced from its own sample")
    for i, a in enumerate(cones):
        for b in cones[i + 1 :]:
            x = intersect(a, b)
            if not (is_face(x, a) and is_face(x, b)):
                raise InternalError("GIT cones do not intersect in faces")

    chambers = tuple(
        k
        for k in cones
        if not any(k2 is not k and contains_cone(k2, k) for k2 in cones)
    )
    interior = tuple(
        k for k in cones if relint_contains(om.generic, relint_sample(k))
    )
    return GitFan(cones=cones, chambers=chambers, interior=interior, generic=om.generic)


def interior_git_cones(fan: GitFan) -> tuple[Cone, ...]:
    """GIT cones whose relative interior lies inside that of the weight cone."""
    return fan.interior
