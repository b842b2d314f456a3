"""Command line interface.

Verbs: validate, orbit-cones, git-fan, collections, classify, dot.
INPUT is a file path, "-" for stdin, or "fixture:NAME" for a bundled
example.  Exit codes: 0 ok, 2 input error, 3 cap exceeded, 4 internal
invariant failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import docio
from .errors import CapError, ConequotError, InputError, InternalError
from .fixtures import FIXTURE_NAMES, fixture_text
from .grading import (
    is_pointed_grading,
    orbit_cones,
    require_structural,
    validate,
)
from .gitfan import git_fan
from .pipeline import classify
from .twomax import (
    annotate_quasiprojectivity,
    morphism_poset,
    two_maximal_collections,
)

ENV_MAX_OMEGA = "CONEQUOT_MAX_OMEGA"


def _read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if source.startswith("fixture:"):
        return fixture_text(source[len("fixture:"):])
    try:
        with open(source, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as ex:
        raise InputError(f"cannot read input {source!r}: {ex}") from None


def _resolve_max_omega(args) -> int | None:
    if args.max_omega is not None:
        if args.max_omega < 1:
            raise InputError("--max-omega must be at least 1")
        return args.max_omega
    env = os.environ.get(ENV_MAX_OMEGA)
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise InputError(
                f"{ENV_MAX_OMEGA} must be an integer, got {env!r}"
            ) from None
        if value < 1:
            raise InputError(f"{ENV_MAX_OMEGA} must be at least 1")
        return value
    return None


def _pointed_or_none(gi):
    try:
        require_structural(gi)
    except InputError:
        return None
    return is_pointed_grading(gi)


def _partial_stage(doc, stage: str, max_omega):
    """Run the pipeline up to the requested stage on structurally valid input."""
    gi = doc.grading
    require_structural(gi)
    om = orbit_cones(gi)
    notes = list(om.warnings)
    if stage == "orbit-cones":
        return docio.orbit_cones_payload(doc, om, notes)
    fan = git_fan(om)
    if stage == "git-fan":
        return docio.git_fan_payload(doc, om, fan, notes)
    cols = annotate_quasiprojectivity(
        two_maximal_collections(om, max_omega=max_omega), fan, om
    )
    interior = tuple(c for c in cols if c.interior)
    poset = morphism_poset(interior)
    pointed = is_pointed_grading(gi)
    return docio.collections_payload(
        doc, om, fan, cols, interior, poset, pointed, notes
    )


def _geometry_flags(res) -> list[str]:
    flags = []
    for geo in res.geometry:
        parts = []
        if geo.locally_factorial:
            parts.append("lf")
        if geo.q_factorial:
            parts.append("qf")
        if geo.quasiprojective:
            parts.append("qp")
        if geo.projective:
            parts.append("proj")
        if geo.ample_nonempty:
            parts.append("ample")
        flags.append(" ".join(parts))
    return flags


def _dispatch(args) -> tuple[str, int]:
    text = _read_input(args.input)
    doc = docio.parse_input(text, strict=args.strict)
    max_omega = _resolve_max_omega(args)
    # parse warnings go to stderr, not into reports: the echoed input has
    # already been normalized, so re-running on it must reproduce the
    # report byte for byte
    for w in doc.warnings:
        print(f"warning: {w}", file=sys.stderr)

    if args.command == "validate":
        vr = validate(doc.grading)
        payload = docio.validation_payload(doc, vr, _pointed_or_none(doc.grading))
        code = 0 if vr.ok else 2
    elif args.command in ("orbit-cones", "git-fan", "collections"):
        payload = _partial_stage(doc, args.command, max_omega)
        code = 0
    elif args.command == "classify":
        res = classify(doc.grading, max_omega=max_omega)
        payload = docio.classification_payload(doc, res)
        code = 0
    elif args.command == "dot":
        res = classify(doc.grading, max_omega=max_omega)
        return docio.emit_dot(res.poset, _geometry_flags(res)), 0
    else:  # pragma: no cover - argparse enforces the choices
        raise InputError(f"unknown command {args.command!r}")

    if args.output == "text":
        return docio.render_text(payload), code
    return docio.render_json(payload), code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conequot",
        description=(
            "Classify the small quotient embeddings of a torus-graded "
            "affine algebra from its generator degrees."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "input",
        metavar="INPUT",
        help="path to a JSON document, '-' for stdin, or fixture:NAME "
        "(available: " + ", ".join(FIXTURE_NAMES) + ")",
    )
    common.add_argument(
        "--output",
        choices=("json", "text"),
        default="json",
        help="report format (default json; ignored by 'dot')",
    )
    common.add_argument(
        "--max-omega",
        type=int,
        default=None,
        metavar="N",
        help="cap on the number of orbit cones fed to collection "
        f"enumeration (default 64; env {ENV_MAX_OMEGA})",
    )
    common.add_argument(
        "--strict",
        action="store_true",
        help="reject unknown input fields instead of warning",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check the input document")
    sub.add_parser("orbit-cones", parents=[common], help="list the orbit cones")
    sub.add_parser("git-fan", parents=[common], help="compute the GIT fan")
    sub.add_parser(
        "collections", parents=[common], help="enumerate 2-maximal collections"
    )
    sub.add_parser(
        "classify", parents=[common], help="full classification with geometry"
    )
    sub.add_parser(
        "dot", parents=[common], help="DOT diagram of the morphism poset"
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = _dispatch(args)
    except InputError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    except CapError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 3
    except InternalError as ex:
        print(f"internal error: {ex}", file=sys.stderr)
        return 4
    except ConequotError as ex:  # pragma: no cover - defensive
        print(f"internal error: {ex}", file=sys.stderr)
        return 4
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
