"""Input documents and report rendering.

The input format is a single JSON object:

    {
      "schema_version": "1",
      "lattice_rank": 2,
      "mode": "suitable",
      "generators": [{"name": "x1", "degree": [1, 0]}, ...],
      "f_faces": [[], [1], [1, 2], ...],      # explicit mode only, 1-based
      "metadata": {...}                        # free form, echoed back
    }

Parsing reports precise field paths on errors.  Unknown fields are
warnings by default and errors in strict mode.  Reports echo a
normalized copy of the input; running the tool again on that echo
reproduces the report byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cones import Cone
from .errors import InputError
from .geometry import FaceFamily, GeometryReport
from .grading import (
    GradingInput,
    ValidationReport,
    _structural_errors,
    make_grading_input,
)
from .pipeline import ClassificationResult
from .twomax import MorphismPoset

SCHEMA_VERSION = "1"

_TOP_KEYS = {
    "schema_version",
    "lattice_rank",
    "mode",
    "generators",
    "f_faces",
    "metadata",
}


@dataclass(frozen=True, slots=True)
class InputDocument:
    grading: GradingInput
    metadata: dict
    schema_version: str
    warnings: tuple[str, ...]


def _require_int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{path}: expected an integer, got {value!r}")
    return value


def parse_input(text: str, strict: bool = False) -> InputDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as ex:
        raise InputError(f"input is not valid JSON: {ex}") from None
    if not isinstance(doc, dict):
        raise InputError("input document must be a JSON object")

    warnings: list[str] = []
    unknown = sorted(set(doc) - _TOP_KEYS)
    if unknown:
        msg = "unknown field(s): " + ", ".join(unknown)
        if strict:
            raise InputError(msg)
        warnings.append(msg + " (ignored)")

    version = doc.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise InputError(
            f"schema_version: expected {SCHEMA_VERSION!r}, got {version!r}"
        )

    if "lattice_rank" not in doc:
        raise InputError("lattice_rank: required field is missing")
    rank = _require_int(doc["lattice_rank"], "lattice_rank")

    if "mode" not in doc:
        raise InputError("mode: required field is missing")
    mode = doc["mode"]
    if mode not in ("suitable", "explicit"):
        raise InputError(
            f"mode: expected 'suitable' or 'explicit', got {mode!r}"
        )

    if "generators" not in doc:
        raise InputError("generators: required field is missing")
    raw_gens = doc["generators"]
    if not isinstance(raw_gens, list) or not raw_gens:
        raise InputError("generators: expected a non-empty list")
    gens = []
    for pos, item in enumerate(raw_gens):
        path = f"generators[{pos}]"
        if not isinstance(item, dict):
            raise InputError(f"{path}: expected an object")
        extra = sorted(set(item) - {"name", "degree"})
        if extra:
            msg = f"{path}: unknown field(s): " + ", ".join(extra)
            if strict:
                raise InputError(msg)
            warnings.append(msg + " (ignored)")
        name = item.get("name")
        if not isinstance(name, str) or not name:
            raise InputError(f"{path}.name: expected a non-empty string")
        degree = item.get("degree")
        if not isinstance(degree, list):
            raise InputError(f"{path}.degree: expected a list of integers")
        gens.append(
            (name, tuple(_require_int(x, f"{path}.degree[{i}]") for i, x in enumerate(degree)))
        )

    f_faces = None
    if "f_faces" in doc:
        raw_faces = doc["f_faces"]
        if not isinstance(raw_faces, list):
            raise InputError("f_faces: expected a list of index lists")
        faces = []
        for pos, face in enumerate(raw_faces):
            if not isinstance(face, list):
                raise InputError(f"f_faces[{pos}]: expected a list of integers")
            faces.append(
                frozenset(
                    _require_int(x, f"f_faces[{pos}][{i}]")
                    for i, x in enumerate(face)
                )
            )
        if len(set(faces)) != len(faces):
            warnings.append("f_faces: duplicate faces removed")
        # canonical order: by size, then sorted index tuple
        f_faces = tuple(
            sorted(set(faces), key=lambda f: (len(f), sorted(f)))
        )

    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise InputError("metadata: expected an object")

    grading = make_grading_input(rank, gens, mode, f_faces)
    # schema-level structural problems (bad rank, degree lengths, f_faces
    # shape) are parse errors; semantic checks stay with validate()
    structural = _structural_errors(grading)
    if structural:
        raise InputError("; ".join(structural))
    return InputDocument(
        grading=grading,
        metadata=metadata,
        schema_version=SCHEMA_VERSION,
        warnings=tuple(warnings),
    )


def normalized_document(doc: InputDocument) -> dict:
    gi = doc.grading
    out = {
        "schema_version": doc.schema_version,
        "lattice_rank": gi.lattice_rank,
        "mode": gi.mode,
        "generators": [
            {"name": n, "degree": list(d)} for n, d in gi.generators
        ],
    }
    if gi.f_faces is not None:
        out["f_faces"] = [
            sorted(f) for f in sorted(gi.f_faces, key=lambda f: (len(f), sorted(f)))
        ]
    out["metadata"] = doc.metadata
    return out


# ---------------------------------------------------------------- rendering


def _cone_json(c: Cone) -> dict:
    return {
        "rays": [list(r) for r in c.rays],
        "lineality": [list(b) for b in c.lineality],
        "facets": [list(a) for a in c.facet_normals],
        "equations": [list(e) for e in c.span_equations],
        "dim": c.dim,
    }


def _family_json(f: FaceFamily) -> dict:
    return {
        "kind": f.kind,
        "degrees": [list(d) for d in f.degrees],
        "index_groups": [list(g) for g in f.index_groups],
        "count": f.count,
    }


def _validation_json(vr: ValidationReport, pointed: bool | None) -> dict:
    return {
        "ok": vr.ok,
        "faithful": vr.faithful,
        "facet_ok": list(vr.facet_ok),
        "facet_failures": list(vr.facet_failures),
        "pointed": pointed,
        "errors": list(vr.errors),
        "warnings": list(vr.warnings),
    }


def validation_payload(doc: InputDocument, vr: ValidationReport, pointed: bool | None) -> dict:
    return {
        "report_version": "1",
        "input": normalized_document(doc),
        "validation": _validation_json(vr, pointed),
    }


def _geometry_json(geo: GeometryReport, fan_ids: dict[Cone, str]) -> dict:
    pic_index = geo.picard_index if geo.picard_index is not None else "infinite"
    return {
        "locally_factorial": geo.locally_factorial,
        "q_factorial": geo.q_factorial,
        "smooth_toric_mode": geo.smooth_toric_mode,
        "class_group_rank": geo.class_group_rank,
        "picard": {
            "basis": [list(b) for b in geo.picard.basis],
            "rank": geo.picard_rank,
            "index": pic_index,
        },
        "semiample": _cone_json(geo.semiample),
        "ample": {
            "nonempty": geo.ample_nonempty,
            "sample": list(geo.ample_sample)
            if geo.ample_sample is not None
            else None,
        },
        "quasiprojective": geo.quasiprojective,
        "projective": geo.projective,
        "git_cone_witness": fan_ids.get(geo.git_cone_witness)
        if geo.git_cone_witness is not None
        else None,
        "bunch": [_cone_json(t) for t in geo.bunch.members],
        "relevant_faces": [_family_json(f) for f in geo.relevant],
        "covering": [_family_json(f) for f in geo.covering],
    }


def _orbit_cones_json(om) -> tuple[dict, dict]:
    omega_ids = {c: f"O{i}" for i, c in enumerate(om.cones)}
    cones_json = []
    for c in om.cones:
        entry = {"id": omega_ids[c]}
        entry.update(_cone_json(c))
        entry["witness_face"] = sorted(om.witness(c))
        entry["is_generic"] = c == om.generic
        cones_json.append(entry)
    return {"generic": omega_ids[om.generic], "cones": cones_json}, omega_ids


def _git_fan_json(fan) -> tuple[dict, dict]:
    fan_ids = {c: f"K{i}" for i, c in enumerate(fan.cones)}
    interior_set = set(fan.interior)
    chamber_set = set(fan.chambers)
    fan_json = []
    for c in fan.cones:
        entry = {"id": fan_ids[c]}
        entry.update(_cone_json(c))
        entry["chamber"] = c in chamber_set
        entry["interior"] = c in interior_set
        fan_json.append(entry)
    return {"cones": fan_json}, fan_ids


def _collections_json(collections, interior, pointed, omega_ids, fan_ids) -> list:
    col_ids = {id(c): f"C{i}" for i, c in enumerate(collections)}
    emb_ids = {id(c): f"X{i}" for i, c in enumerate(interior)}
    out = []
    for c in collections:
        out.append(
            {
                "id": col_ids[id(c)],
                "embedding": emb_ids.get(id(c)),
                "members": [omega_ids[m] for m in c.members],
                "two_connected": c.two_connected,
                "two_maximal": c.two_maximal,
                "interior": c.interior,
                "quasiprojective": c.quasiprojective,
                "projective": bool(c.quasiprojective and pointed),
                "git_cone_witness": fan_ids.get(c.git_cone_witness)
                if c.git_cone_witness is not None
                else None,
            }
        )
    return out


def _morphisms_json(poset: MorphismPoset) -> dict:
    return {
        "face_order": [[f"X{i}", f"X{j}"] for i, j in poset.strict_arrows()],
        "variety_arrows": [[f"X{j}", f"X{i}"] for i, j in poset.hasse_arrows()],
    }


def classification_payload(doc: InputDocument, res: ClassificationResult) -> dict:
    oc_json, omega_ids = _orbit_cones_json(res.omega)
    fan_json, fan_ids = _git_fan_json(res.fan)
    collections_json = _collections_json(
        res.collections, res.interior, res.pointed, omega_ids, fan_ids
    )
    col_ids = {id(c): f"C{i}" for i, c in enumerate(res.collections)}
    embeddings_json = []
    for i, (c, geo) in enumerate(zip(res.interior, res.geometry)):
        embeddings_json.append(
            {
                "id": f"X{i}",
                "collection": col_ids[id(c)],
                "geometry": _geometry_json(geo, fan_ids),
            }
        )
    return {
        "report_version": "1",
        "input": normalized_document(doc),
        "validation": _validation_json(res.validation, res.pointed),
        "orbit_cones": oc_json,
        "git_fan": fan_json,
        "collections": collections_json,
        "embeddings": embeddings_json,
        "morphisms": _morphisms_json(res.poset),
        "notes": list(res.notes),
    }


def orbit_cones_payload(doc: InputDocument, om, notes) -> dict:
    oc_json, _ = _orbit_cones_json(om)
    return {
        "report_version": "1",
        "input": normalized_document(doc),
        "orbit_cones": oc_json,
        "notes": list(notes),
    }


def git_fan_payload(doc: InputDocument, om, fan, notes) -> dict:
    oc_json, _ = _orbit_cones_json(om)
    fan_json, _ = _git_fan_json(fan)
    return {
        "report_version": "1",
        "input": normalized_document(doc),
        "orbit_cones": oc_json,
        "git_fan": fan_json,
        "notes": list(notes),
    }


def collections_payload(
    doc: InputDocument, om, fan, collections, interior, poset, pointed, notes
) -> dict:
    oc_json, omega_ids = _orbit_cones_json(om)
    fan_json, fan_ids = _git_fan_json(fan)
    return {
        "report_version": "1",
        "input": normalized_document(doc),
        "orbit_cones": oc_json,
        "git_fan": fan_json,
        "collections": _collections_json(
            collections, interior, pointed, omega_ids, fan_ids
        ),
        "morphisms": _morphisms_json(poset),
        "notes": list(notes),
    }


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=True) + "\n"


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _fmt_cone_short(c: Cone) -> str:
    parts = []
    if c.rays:
        parts.append("rays " + " ".join(_fmt_vec(r) for r in c.rays))
    if c.lineality:
        parts.append("lin " + " ".join(_fmt_vec(b) for b in c.lineality))
    if not parts:
        parts.append("origin")
    return f"dim {c.dim}: " + "; ".join(parts)


def render_text(payload: dict) -> str:
    """Plain-text rendering of any payload produced above."""
    lines: list[str] = []
    inp = payload["input"]
    lines.append(
        f"input: rank {inp['lattice_rank']} {inp['mode']} grading, "
        f"{len(inp['generators'])} generators"
    )
    if "validation" in payload:
        v = payload["validation"]
        lines.append(
            f"validation: ok={v['ok']} faithful={v['faithful']} "
            f"pointed={v['pointed']} facet_failures={v['facet_failures']}"
        )
        for e in v["errors"]:
            lines.append(f"  error: {e}")
        for w in v["warnings"]:
            lines.append(f"  warning: {w}")
    if "orbit_cones" in payload:
        oc = payload["orbit_cones"]
        lines.append(f"orbit cones ({len(oc['cones'])}), generic {oc['generic']}:")
        for c in oc["cones"]:
            mark = " generic" if c["is_generic"] else ""
            lines.append(
                f"  {c['id']}: dim {c['dim']} rays {c['rays']} lin {c['lineality']}"
                f" witness {c['witness_face']}{mark}"
            )
    if "git_fan" in payload:
        gf = payload["git_fan"]
        lines.append(f"git fan ({len(gf['cones'])} cones):")
        for c in gf["cones"]:
            flags = []
            if c["chamber"]:
                flags.append("chamber")
            if c["interior"]:
                flags.append("interior")
            lines.append(
                f"  {c['id']}: dim {c['dim']} rays {c['rays']} lin {c['lineality']}"
                + (" [" + ",".join(flags) + "]" if flags else "")
            )
    if "collections" in payload:
        lines.append(f"2-maximal collections ({len(payload['collections'])}):")
        for c in payload["collections"]:
            flags = []
            if c["interior"]:
                flags.append("interior")
            if c["quasiprojective"]:
                flags.append("quasiprojective")
            if c["projective"]:
                flags.append("projective")
            emb = f" = {c['embedding']}" if c.get("embedding") else ""
            wit = (
                f" witness {c['git_cone_witness']}"
                if c.get("git_cone_witness")
                else ""
            )
            lines.append(
                f"  {c['id']}{emb}: members {c['members']}"
                + (" [" + ",".join(flags) + "]" if flags else "")
                + wit
            )
    if "embeddings" in payload:
        lines.append(f"embeddings ({len(payload['embeddings'])}):")
        for e in payload["embeddings"]:
            g = e["geometry"]
            lines.append(
                f"  {e['id']}: locally_factorial={g['locally_factorial']} "
                f"q_factorial={g['q_factorial']} "
                f"smooth_toric_mode={g['smooth_toric_mode']} "
                f"picard_rank={g['picard']['rank']} "
                f"picard_index={g['picard']['index']} "
                f"ample={g['ample']['nonempty']} "
                f"quasiprojective={g['quasiprojective']} "
                f"projective={g['projective']}"
            )
    if "morphisms" in payload:
        arrows = payload["morphisms"]["variety_arrows"]
        lines.append(
            "morphisms: "
            + (
                ", ".join(f"{a} -> {b}" for a, b in arrows)
                if arrows
                else "(none)"
            )
        )
    for n in payload.get("notes", []):
        lines.append(f"note: {n}")
    return "\n".join(lines) + "\n"


def emit_dot(poset: MorphismPoset, flags: list[str] | None = None) -> str:
    """DOT digraph of the variety-level morphisms (Hasse arrows).

    Node ``Xj -> Xi`` is emitted for each covering pair ``i < j`` in the
    face order; composite arrows are omitted for readability.
    """
    n = len(poset.nodes)
    labels = flags if flags is not None else [""] * n
    lines = ["digraph embeddings {"]
    for i in range(n):
        suffix = f"\\n{labels[i]}" if labels[i] else ""
        lines.append(f'  "X{i}" [label="X{i}{suffix}"];')
    for i, j in poset.hasse_arrows():
        lines.append(f'  "X{j}" -> "X{i}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
