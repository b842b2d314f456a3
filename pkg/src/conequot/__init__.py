"""conequot: exact classification of torus-quotient embeddings.

Given a finitely generated algebra with a torus grading (presented as a
weight matrix, optionally with an explicit list of admissible coordinate
faces), the package computes the orbit cones of the weight data, the GIT
fan of the quotient problem, the 2-maximal collections of orbit cones
with their morphism order, and per-collection geometry reports (local
factoriality, Q-factoriality, Picard lattice, semiample and ample cones,
quasiprojectivity).  All arithmetic is exact.
"""

from .errors import (
    BunchError,
    CapError,
    ConequotError,
    DomainError,
    InputError,
    InternalError,
)
from .lattices import (
    Sublattice,
    det,
    generates_full_lattice,
    hnf,
    image_lattice,
    intersect_sublattices,
    left_kernel,
    right_kernel,
    smith_normal_form,
    sublattice_index,
)
from .cones import (
    Cone,
    cone_equal,
    cone_from_constraints,
    cone_from_generators,
    contains_cone,
    contains_point,
    faces,
    intersect,
    is_face,
    relint_contains,
    relint_sample,
    relint_subset,
    relints_intersect,
)
from .grading import (
    GradingInput,
    OrbitConeSet,
    ValidationReport,
    is_pointed_grading,
    make_grading_input,
    orbit_cones,
    require_structural,
    validate,
)
from .gitfan import GitFan, git_cone, git_fan, interior_git_cones
from .twomax import (
    Bunch,
    Collection,
    MorphismPoset,
    OverlapGraph,
    annotate_quasiprojectivity,
    bunch_from_collection,
    check_bunch,
    collection_from_bunch,
    collection_from_git_cone,
    face_relation,
    interior_collections,
    is_quasiprojective,
    morphism_poset,
    overlap_graph,
    two_maximal_collections,
)
from .geometry import (
    FaceFamily,
    GeometryReport,
    ample_cones,
    covering_collection,
    geometry_report,
    local_factoriality,
    picard_lattice,
    q_factoriality,
    relevant_faces,
)
from .pipeline import ClassificationResult, classify
from .docio import (
    InputDocument,
    classification_payload,
    emit_dot,
    normalized_document,
    parse_input,
    render_json,
    render_text,
)
from .fixtures import FIXTURE_NAMES, fixture_dict, fixture_text

__version__ = "0.1.0"

__all__ = [
    "BunchError",
    "CapError",
    "ConequotError",
    "DomainError",
    "InputError",
    "InternalError",
    "Sublattice",
    "generates_full_lattice",
    "hnf",
    "det",
    "image_lattice",
    "intersect_sublattices",
    "left_kernel",
    "right_kernel",
    "smith_normal_form",
    "sublattice_index",
    "Cone",
    "cone_equal",
    "cone_from_constraints",
    "cone_from_generators",
    "contains_cone",
    "contains_point",
    "faces",
    "intersect",
    "is_face",
    "relint_contains",
    "relint_sample",
    "relint_subset",
    "relints_intersect",
    "GradingInput",
    "OrbitConeSet",
    "ValidationReport",
    "is_pointed_grading",
    "make_grading_input",
    "orbit_cones",
    "require_structural",
    "validate",
    "GitFan",
    "git_cone",
    "git_fan",
    "interior_git_cones",
    "Bunch",
    "Collection",
    "MorphismPoset",
    "OverlapGraph",
    "annotate_quasiprojectivity",
    "bunch_from_collection",
    "check_bunch",
    "collection_from_bunch",
    "collection_from_git_cone",
    "face_relation",
    "interior_collections",
    "is_quasiprojective",
    "morphism_poset",
    "overlap_graph",
    "two_maximal_collections",
    "FaceFamily",
    "GeometryReport",
    "ample_cones",
    "covering_collection",
    "geometry_report",
    "local_factoriality",
    "picard_lattice",
    "q_factoriality",
    "relevant_faces",
    "ClassificationResult",
    "classify",
    "InputDocument",
    "classification_payload",
    "emit_dot",
    "normalized_document",
    "parse_input",
    "render_json",
    "render_text",
    "FIXTURE_NAMES",
    "fixture_dict",
    "fixture_text",
]
