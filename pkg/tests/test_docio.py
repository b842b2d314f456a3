import json

import pytest

from conequot import (
    FIXTURE_NAMES,
    classify,
    emit_dot,
    fixture_text,
    normalized_document,
    parse_input,
    render_json,
    render_text,
)
from conequot.docio import classification_payload
from conequot.errors import InputError


def _doc(payload, **extra):
    base = {"lattice_rank": 1, "mode": "suitable"}
    base.update(payload)
    base.update(extra)
    return json.dumps(base)


GEN = [{"name": "x", "degree": [1]}]


@pytest.mark.parametrize(
    "text,message",
    [
        ("{nope", "input is not valid JSON"),
        ("[1, 2]", "input document must be a JSON object"),
        (json.dumps({"generators": GEN, "mode": "suitable"}),
         "lattice_rank: required field is missing"),
        (_doc({"lattice_rank": True, "generators": GEN}),
         "lattice_rank: expected an integer, got True"),
        (_doc({"generators": 7}), "generators: expected a non-empty list"),
        (_doc({"generators": [3]}), "generators[0]: expected an object"),
        (_doc({"generators": [{"degree": [1]}]}),
         "generators[0].name: expected a non-empty string"),
        (_doc({"generators": [{"name": "x"}]}),
         "generators[0].degree: expected a list of integers"),
        (_doc({"generators": [{"name": "x", "degree": [1.5]}]}),
         "generators[0].degree[0]: expected an integer, got 1.5"),
        (_doc({"generators": [{"name": "x", "degree": [True]}]}),
         "generators[0].degree[0]: expected an integer, got True"),
        (_doc({"generators": GEN, "mode": "odd"}),
         "mode: expected 'suitable' or 'explicit', got 'odd'"),
        (_doc({"generators": GEN, "mode": "explicit"}),
         "explicit mode requires f_faces"),
        (_doc({"generators": GEN, "f_faces": [[1]]}),
         "f_faces is only allowed in explicit mode"),
        (_doc({"generators": GEN, "mode": "explicit", "f_faces": [[0]]}),
         "f_faces[0]: indices out of range 1..1"),
        (_doc({"generators": GEN, "schema_version": "9"}),
         "schema_version: expected '1', got '9'"),
        (_doc({"generators": GEN, "metadata": 3}),
         "metadata: expected an object"),
        (_doc({"generators": [{"name": "x", "degree": [1, 2]}]}),
         "generator 1: degree length 2 != lattice_rank"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(InputError) as err:
        parse_input(text)
    assert message in str(err.value)


def test_unknown_fields_warn_or_error():
    text = _doc({"generators": GEN}, zap=1)
    doc = parse_input(text)
    assert doc.warnings == ("unknown field(s): zap (ignored)",)
    with pytest.raises(InputError, match="unknown field"):
        parse_input(text, strict=True)


def test_duplicate_faces_deduped():
    doc = parse_input(_doc({
        "generators": GEN,
        "mode": "explicit",
        "f_faces": [[1], [1], []],
    }))
    assert doc.warnings == ("f_faces: duplicate faces removed",)
    # canonical order: by size, then lexicographically
    assert doc.grading.f_faces == (frozenset(), frozenset({1}))


def test_normalized_document_key_order():
    doc = parse_input(fixture_text("smoothemb"))
    assert list(normalized_document(doc)) == [
        "schema_version", "lattice_rank", "mode", "generators", "metadata",
    ]
    exp = parse_input(_doc({
        "generators": GEN, "mode": "explicit", "f_faces": [[], [1]],
    }))
    assert list(normalized_document(exp)) == [
        "schema_version", "lattice_rank", "mode", "generators", "f_faces",
        "metadata",
    ]


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_echo_round_trip(name):
    doc = parse_input(fixture_text(name))
    echo = parse_input(json.dumps(normalized_document(doc)))
    assert echo.grading == doc.grading
    assert echo.metadata == doc.metadata
    assert echo.warnings == ()


def test_render_json_deterministic():
    doc = parse_input(fixture_text("hyperbolic"))
    a = render_json(classification_payload(doc, classify(doc.grading)))
    b = render_json(classification_payload(doc, classify(doc.grading)))
    assert a == b
    assert a.endswith("\n")
    json.loads(a)  # stays valid JSON


def test_render_text_mentions_embeddings():
    doc = parse_input(fixture_text("hyperbolic"))
    text = render_text(classification_payload(doc, classify(doc.grading)))
    assert "X0" in text and "orbit cones" in text


def test_emit_dot_smoothemb(results):
    out = emit_dot(results["smoothemb"].poset)
    assert out == (
        "digraph embeddings {\n"
        '  "X0" [label="X0"];\n'
        '  "X1" [label="X1"];\n'
        '  "X2" [label="X2"];\n'
        '  "X1" -> "X0";\n'
        '  "X2" -> "X0";\n'
        "}\n"
    )


def test_emit_dot_flags_and_single_node(results):
    flagged = emit_dot(results["smoothemb"].poset, flags=["lf qf", "a", "b"])
    assert '"X0" [label="X0\\nlf qf"];' in flagged
    single = emit_dot(results["intro-ex1"].poset)
    assert single.count("label") == 1 and "->" not in single
