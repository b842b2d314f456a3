"""Geometry verdicts for an interior 2-maximal collection.

The collection's bunch (its minimal members) determines which coordinate
faces of the input are *relevant*: those whose projected cone's relative
interior contains some bunch member's relative interior.  In suitable
mode faces are grouped by their set of distinct degrees, since every
verdict below depends only on that signature; a ``FaceFamily`` stands
for all faces sharing one signature.  The covering collection consists
of the inclusion-minimal relevant faces.

Verdicts:

* locally factorial: every relevant face's degrees generate the full
  weight lattice (in suitable mode this is also the toric smoothness
  criterion),
* Q-factorial: every bunch member is full-dimensional,
* Picard lattice: intersection over the covering collection of the
  lattices spanned by each face's degrees, inside the class lattice Z^k,
* semiample cone: intersection of the bunch members; the ample cone is
  its relative interior when that lies interior to every member.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cones import Cone, cone_from_generators, intersect, relint_contains, relint_sample, relint_subset
from .errors import InputError, InternalError
from .gitfan import GitFan, git_fan
from .grading import (
    GradingInput,
    OrbitConeSet,
    is_pointed_grading,
    validate,
)
from .lattices import (
    IntVec,
    Sublattice,
    generates_full_lattice,
    intersect_sublattices,
    sublattice_index,
)
from .twomax import Bunch, Collection, bunch_from_collection, is_quasiprojective


@dataclass(frozen=True, slots=True)
class FaceFamily:
    """A set of coordinate faces sharing one distinct-degree signature.

    ``kind`` is ``"all-nonempty"`` (every face picking at least one index
    from each group and none elsewhere), ``"one-each"`` (one index per
    group; the inclusion-minimal faces of an all-nonempty family), or
    ``"single"`` (exactly the union of the groups; explicit mode).
    """

    kind: str
    degrees: tuple[IntVec, ...]  # sorted distinct degrees
    index_groups: tuple[tuple[int, ...], ...]  # 1-based indices per degree

    @property
    def count(self) -> int:
        n = 1
        if self.kind == "all-nonempty":
            for g in self.index_groups:
                n *= 2 ** len(g) - 1
        elif self.kind == "one-each":
            for g in self.index_groups:
                n *= len(g)
        return n

    @property
    def indices(self) -> frozenset[int]:
        return frozenset(i for g in self.index_groups for i in g)


def _family_for_indices(gi: GradingInput, idxs, kind: str) -> FaceFamily:
    groups: dict[IntVec, list[int]] = {}
    for i in sorted(idxs):
        groups.setdefault(gi.degrees[i - 1], []).append(i)
    degs = tuple(sorted(groups))
    return FaceFamily(
        kind=kind,
        degrees=degs,
        index_groups=tuple(tuple(groups[d]) for d in degs),
    )


def relevant_faces(
    gi: GradingInput, om: OrbitConeSet, bunch: Bunch
) -> tuple[FaceFamily, ...]:
    """Families of faces whose projected cone's interior holds a member's."""
    k = gi.lattice_rank
    for t in bunch.members:
        if t not in set(om.cones):
            raise InputError("bunch member is not an orbit cone of this input")

    def relevant_cone(c: Cone) -> bool:
        return any(relint_subset(t, c) for t in bunch.members)

    out: list[FaceFamily] = []
    if gi.mode == "suitable":
        groups: dict[IntVec, list[int]] = {}
        for i, d in enumerate(gi.degrees, start=1):
            groups.setdefault(d, []).append(i)
        distinct = sorted(groups)
        for size in range(len(distinct) + 1):
            for sig in combinations(distinct, size):
                if relevant_cone(cone_from_generators(k, sig)):
                    out.append(
                        FaceFamily(
                            kind="all-nonempty",
                            degrees=tuple(sig),
                            index_groups=tuple(tuple(groups[d]) for d in sig),
                        )
                    )
    else:
        assert gi.f_faces is not None
        seen: set[frozenset[int]] = set()
        for f in gi.f_faces:
            if f in seen:
                continue
            seen.add(f)
            c = cone_from_generators(k, [gi.degrees[i - 1] for i in sorted(f)])
            if relevant_cone(c):
                out.append(_family_for_indices(gi, f, "single"))
    out.sort(key=lambda fam: (fam.degrees, fam.index_groups))
    return tuple(out)


def covering_collection(rlv) -> tuple[FaceFamily, ...]:
    """Inclusion-minimal relevant faces, as families.

    A face is minimal relevant iff its signature is minimal among
    relevant signatures and it picks exactly one index per degree; so
    all-nonempty families turn into one-each families.
    """
    rlv = list(rlv)
    out = []
    if all(f.kind == "all-nonempty" for f in rlv):
        sigs = [set(f.degrees) for f in rlv]
        for f, sig in zip(rlv, sigs):
            if not any(other < sig for other in sigs):
                out.append(
                    FaceFamily(
                        kind="one-each",
                        degrees=f.degrees,
                        index_groups=f.index_groups,
                    )
                )
    else:
        idx_sets = [f.indices for f in rlv]
        for f, s in zip(rlv, idx_sets):
            if not any(other < s for other in idx_sets):
                out.append(f)
    return tuple(out)


def local_factoriality(gi: GradingInput, rlv, cov=None) -> bool:
    """Do the degrees of every relevant face generate the weight lattice?

    When ``cov`` is given the same verdict is recomputed from the
    minimal faces alone and asserted equal (it must be, by monotonicity
    of spanned lattices).
    """
    k = gi.lattice_rank
    full = all(generates_full_lattice(f.degrees, k) for f in rlv)
    if cov is not None:
        from_cov = all(generates_full_lattice(f.degrees, k) for f in cov)
        if full != from_cov:
            raise InternalError(
                "factoriality verdicts from relevant and covering faces disagree"
            )
    return full


def q_factoriality(bunch: Bunch, lattice_rank: int) -> bool:
    """Is every bunch member full-dimensional?"""
    return all(t.dim == lattice_rank for t in bunch.members)


def picard_lattice(gi: GradingInput, cov) -> Sublattice:
    """Intersection of the degree spans over the covering collection."""
    cov = list(cov)
    if not cov:
        raise InputError("covering collection is empty")
    k = gi.lattice_rank
    result = Sublattice.from_generators(k, cov[0].degrees)
    for f in cov[1:]:
        result = intersect_sublattices(
            result, Sublattice.from_generators(k, f.degrees)
        )
    return result


def ample_cones(bunch: Bunch) -> tuple[Cone, bool, IntVec | None]:
    """Semiample cone, ample nonemptiness, and an ample sample point.

    The semiample cone is the intersection of the bunch members; the
    ample cone (the intersection of their relative interiors) is
    nonempty iff the semiample cone's relative-interior sample lies
    interior to every member.
    """
    members = bunch.members
    semiample = members[0]
    for t in members[1:]:
        semiample = intersect(semiample, t)
    p = relint_sample(semiample)
    nonempty = all(relint_contains(t, p) for t in members)
    return semiample, nonempty, (p if nonempty else None)


@dataclass(frozen=True, slots=True)
class GeometryReport:
    collection: Collection
    bunch: Bunch
    locally_factorial: bool
    q_factorial: bool
    smooth_toric_mode: bool | None
    class_group_rank: int
    picard: Sublattice
    picard_index: int | None
    semiample: Cone
    ample_nonempty: bool
    ample_sample: IntVec | None
    quasiprojective: bool
    projective: bool
    git_cone_witness: Cone | None
    relevant: tuple[FaceFamily, ...]
    covering: tuple[FaceFamily, ...]

    @property
    def picard_rank(self) -> int:
        return self.picard.rank


def geometry_report(
    gi: GradingInput,
    om: OrbitConeSet,
    col: Collection,
    fan: GitFan | None = None,
) -> GeometryReport:
    """Full geometry verdict for an interior 2-maximal collection.

    Requires the input to pass full validation (including the per-facet
    condition the bunch theory rests on).  The quasiprojectivity flag is
    taken from the collection when already resolved; otherwise it is
    computed against ``fan`` (computed here if not supplied).
    """
    vr = validate(gi)
    if not vr.ok:
        raise InputError("; ".join(vr.errors))
    if not (col.two_maximal and col.interior):
        raise InputError(
            "geometry reports are defined for interior 2-maximal collections"
        )
    k = gi.lattice_rank
    bunch = bunch_from_collection(col)
    rlv = relevant_faces(gi, om, bunch)
    cov = covering_collection(rlv)
    lf = local_factoriality(gi, rlv, cov)
    qf = q_factoriality(bunch, k)
    if lf and not qf:
        raise InternalError("locally factorial verdict without Q-factoriality")
    pic = picard_lattice(gi, cov)
    semiample, ample_ok, sample = ample_cones(bunch)

    if col.quasiprojective is None:
        if fan is None:
            fan = git_fan(om)
        qp, witness = is_quasiprojective(col, fan, om)
    else:
        qp, witness = col.quasiprojective, col.git_cone_witness
    projective = qp and is_pointed_grading(gi)

    return GeometryReport(
        collection=col,
        bunch=bunch,
        locally_factorial=lf,
        q_factorial=qf,
        smooth_toric_mode=(lf if gi.mode == "suitable" else None),
        class_group_rank=k,
        picard=pic,
        picard_index=sublattice_index(pic, k),
        semiample=semiample,
        ample_nonempty=ample_ok,
        ample_sample=sample,
        quasiprojective=qp,
        projective=projective,
        git_cone_witness=witness,
        relevant=rlv,
        covering=cov,
    )
