"""End-to-end classification pipeline.

``classify`` runs: validation, orbit cones, GIT fan, 2-maximal
collections with quasiprojectivity flags, geometry reports for the
interior collections, and the morphism order among them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .geometry import GeometryReport, geometry_report
from .gitfan import GitFan, git_fan
from .grading import (
    GradingInput,
    OrbitConeSet,
    ValidationReport,
    is_pointed_grading,
    orbit_cones,
    validate,
)
from .twomax import (
    Collection,
    MorphismPoset,
    annotate_quasiprojectivity,
    morphism_poset,
    two_maximal_collections,
)


@dataclass(frozen=True, slots=True)
class ClassificationResult:
    grading: GradingInput
    validation: ValidationReport
    pointed: bool
    omega: OrbitConeSet
    fan: GitFan
    collections: tuple[Collection, ...]
    interior: tuple[Collection, ...]
    geometry: tuple[GeometryReport, ...]  # aligned with ``interior``
    poset: MorphismPoset  # over ``interior``
    notes: tuple[str, ...]


def classify(gi: GradingInput, max_omega: int | None = None) -> ClassificationResult:
    vr = validate(gi)
    if not vr.ok:
        raise InputError("; ".join(vr.errors))
    om = orbit_cones(gi)
    fan = git_fan(om)
    cols = annotate_quasiprojectivity(
        two_maximal_collections(om, max_omega), fan, om
    )
    interior = tuple(c for c in cols if c.interior)
    geometry = tuple(geometry_report(gi, om, c, fan) for c in interior)
    poset = morphism_poset(interior)
    notes = vr.warnings + om.warnings
    return ClassificationResult(
        grading=gi,
        validation=vr,
        pointed=is_pointed_grading(gi),
        omega=om,
        fan=fan,
        collections=cols,
        interior=interior,
        geometry=geometry,
        poset=poset,
        notes=notes,
    )
