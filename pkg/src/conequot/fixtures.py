"""Bundled example inputs, loadable by name via ``fixture:NAME``."""

from __future__ import annotations

import json
from importlib import resources

from .errors import InputError

FIXTURE_NAMES = (
    "hyperbolic",
    "intro-ex1",
    "smoothemb",
    "nosmoothemb",
    "sl7",
    "sp6-smooth-weights",
    "sp6-sing-weights",
)


def fixture_text(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise InputError(
            f"unknown fixture {name!r}; available: " + ", ".join(FIXTURE_NAMES)
        )
    path = resources.files("conequot") / "fixtures" / f"{name}.json"
    return path.read_text(encoding="utf-8")


def fixture_dict(name: str) -> dict:
    return json.loads(fixture_text(name))
