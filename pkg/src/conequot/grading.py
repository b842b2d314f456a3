"""Graded inputs and their orbit cones.

The input is a list of named generators with degrees in Z^k.  In
``suitable`` mode every subset of generators is admissible, so the orbit
cones are exactly the cones spanned by subsets of the degree vectors
(deduplicated; enumeration runs over distinct degrees).  In ``explicit``
mode the caller supplies the admissible coordinate faces and each orbit
cone is the projection of one of them.

Validation checks three things: the degrees generate Z^k (the grading is
faithful up to finite index otherwise, which downstream theory does not
cover), the per-facet condition that dropping any single generator still
leaves degrees generating Z^k, and well-formedness of an explicit face
list.  Only the structural and faithfulness checks gate the orbit-cone,
GIT-fan and collection layers; the facet condition is required by the
geometry layer and by ``classify``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .cones import Cone, cone_from_generators, contains_point, faces
from .errors import CapError, InputError
from .lattices import IntVec, generates_full_lattice

GENERATOR_CAP = 24

MODES = ("suitable", "explicit")


@dataclass(frozen=True, slots=True)
class GradingInput:
    """A torus grading: generator names with degrees in Z^lattice_rank."""

    lattice_rank: int
    generators: tuple[tuple[str, IntVec], ...]
    mode: str
    f_faces: tuple[frozenset[int], ...] | None = None  # 1-based indices

    @property
    def r(self) -> int:
        return len(self.generators)

    @property
    def degrees(self) -> tuple[IntVec, ...]:
        return tuple(d for _, d in self.generators)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.generators)


@dataclass(frozen=True, slots=True)
class ValidationReport:
    ok: bool
    faithful: bool
    facet_ok: tuple[bool, ...]  # per 1-based generator index, in order
    errors: tuple[str, ...]
    warnings: tuple[str, ...]

    @property
    def facet_failures(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, ok in enumerate(self.facet_ok) if not ok)


def make_grading_input(lattice_rank, generators, mode, f_faces=None) -> GradingInput:
    gens = tuple((str(n), tuple(int(x) for x in d)) for n, d in generators)
    ff = None
    if f_faces is not None:
        ff = tuple(frozenset(int(i) for i in f) for f in f_faces)
    return GradingInput(int(lattice_rank), gens, str(mode), ff)


def _structural_errors(gi: GradingInput) -> list[str]:
    errors = []
    if gi.lattice_rank < 1:
        errors.append("lattice_rank must be at least 1")
    if gi.r < 1:
        errors.append("at least one generator is required")
    for idx, (_, d) in enumerate(gi.generators, start=1):
        if len(d) != gi.lattice_rank:
            errors.append(
                f"generator {idx}: degree length {len(d)} != lattice_rank"
            )
    if gi.mode not in MODES:
        errors.append(f"mode must be one of {MODES}, got {gi.mode!r}")
    if gi.mode == "explicit":
        if gi.f_faces is None:
            errors.append("explicit mode requires f_faces")
        else:
            full = frozenset(range(1, gi.r + 1))
            for pos, f in enumerate(gi.f_faces):
                bad = [i for i in f if i < 1 or i > gi.r]
                if bad:
                    errors.append(
                        f"f_faces[{pos}]: indices out of range 1..{gi.r}: {sorted(bad)}"
                    )
            if not errors:
                if full not in gi.f_faces:
                    errors.append("f_faces must contain the full index set")
                if frozenset() not in gi.f_faces:
                    errors.append("f_faces must contain the empty set")
    elif gi.f_faces is not None:
        errors.append("f_faces is only allowed in explicit mode")
    return errors


def validate(gi: GradingInput) -> ValidationReport:
    """Full validation: structure, faithfulness, per-facet condition."""
    errors = _structural_errors(gi)
    if errors:
        return ValidationReport(False, False, (), tuple(errors), ())

    warnings = []
    names = gi.names
    if len(set(names)) != len(names):
        warnings.append("generator names are not unique")

    degrees = gi.degrees
    faithful = generates_full_lattice(degrees, gi.lattice_rank)
    if not faithful:
        errors.append("degrees do not generate the full weight lattice")

    facet_ok = []
    for i in range(gi.r):
        rest = degrees[:i] + degrees[i + 1 :]
        facet_ok.append(generates_full_lattice(rest, gi.lattice_rank))
    failures = [str(i + 1) for i, ok in enumerate(facet_ok) if not ok]
    if failures:
        errors.append(
            "facet condition fails when dropping generator(s) "
            + ", ".join(failures)
        )

    if gi.mode == "explicit" and gi.f_faces is not None:
        if len(set(gi.f_faces)) != len(gi.f_faces):
            warnings.append("f_faces contains duplicates")

    return ValidationReport(
        ok=not errors,
        faithful=faithful,
        facet_ok=tuple(facet_ok),
        errors=tuple(errors),
        warnings=tuple(warnings),
    )


def require_structural(gi: GradingInput) -> None:
    errors = _structural_errors(gi)
    if not errors:
        if not generates_full_lattice(gi.degrees, gi.lattice_rank):
            errors = ["degrees do not generate the full weight lattice"]
    if errors:
        raise InputError("; ".join(errors))


@dataclass(frozen=True, slots=True)
class OrbitConeSet:
    """The orbit cones of a grading, with the generic cone marked.

    ``witnesses`` maps each cone to one admissible index set projecting
    onto it (in suitable mode: the set of all generator indices whose
    degree lies in the cone, which is the largest such face).
    """

    ambient_rank: int
    cones: tuple[Cone, ...]  # sorted canonically
    generic: Cone
    witnesses: tuple[tuple[Cone, frozenset[int]], ...] = field(compare=False)
    warnings: tuple[str, ...] = field(compare=False, default=())

    def witness(self, cone: Cone) -> frozenset[int]:
        for c, w in self.witnesses:
            if c == cone:
                return w
        raise KeyError(cone)


def orbit_cones(gi: GradingInput) -> OrbitConeSet:
    """All orbit cones of the grading.

    Requires structural validity and faithfulness; the per-facet
    condition is not needed at this layer.
    """
    require_structural(gi)
    k = gi.lattice_rank
    degrees = gi.degrees
    warnings: list[str] = []

    if gi.mode == "suitable":
        # duplicate degrees are grouped first, so the exponential subset
        # enumeration runs over distinct degrees only
        distinct = sorted(set(degrees))
        if len(distinct) > GENERATOR_CAP:
            raise CapError(
                f"{len(distinct)} distinct degrees exceeds the "
                f"subset-enumeration cap {GENERATOR_CAP}"
            )
        found: dict[Cone, None] = {}
        for size in range(len(distinct) + 1):
            for subset in combinations(distinct, size):
                found.setdefault(cone_from_generators(k, subset))
        generic = cone_from_generators(k, degrees)
        cones = tuple(sorted(found, key=lambda c: c.sort_key))
        witnesses = tuple(
            (
                c,
                frozenset(
                    i + 1 for i, d in enumerate(degrees) if contains_point(c, d)
                ),
            )
            for c in cones
        )
    else:
        assert gi.f_faces is not None
        found = {}
        first_face: dict[Cone, frozenset[int]] = {}
        for f in gi.f_faces:
            c = cone_from_generators(k, [degrees[i - 1] for i in sorted(f)])
            found.setdefault(c)
            first_face.setdefault(c, f)
        generic = cone_from_generators(k, degrees)
        cones = tuple(sorted(found, key=lambda c: c.sort_key))
        cone_set = set(cones)
        closed = all(faces(c) <= cone_set for c in cones)
        if not closed:
            warnings.append(
                "explicit orbit-cone set is not closed under taking faces; "
                "GIT-fan output may not reflect a genuine quotient fan"
            )
        witnesses = tuple((c, first_face[c]) for c in cones)

    return OrbitConeSet(
        ambient_rank=k,
        cones=cones,
        generic=generic,
        witnesses=witnesses,
        warnings=tuple(warnings),
    )


def is_pointed_grading(gi: GradingInput) -> bool:
    """True when the weight cone is pointed and no degree is zero.

    Equivalent to the degree-zero part of the graded algebra being the
    ground field, the standing assumption for projectivity statements.
    """
    require_structural(gi)
    if any(not any(d) for d in gi.degrees):
        return False
    weight_cone = cone_from_generators(gi.lattice_rank, gi.degrees)
    return weight_cone.is_pointed
