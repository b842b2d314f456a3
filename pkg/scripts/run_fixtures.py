#!/usr/bin/env python3
"""Classify every bundled fixture and print a one-line summary each.

Usage: python scripts/run_fixtures.py [--full]
"""

from __future__ import annotations

import argparse
import time

from conequot import (
    FIXTURE_NAMES,
    classify,
    fixture_text,
    parse_input,
    render_text,
    classification_payload,
)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--full", action="store_true", help="print full text reports")
    args = ap.parse_args()

    for name in FIXTURE_NAMES:
        doc = parse_input(fixture_text(name))
        t0 = time.perf_counter()
        res = classify(doc.grading)
        dt = time.perf_counter() - t0
        n_qp = sum(1 for g in res.geometry if g.quasiprojective)
        n_proj = sum(1 for g in res.geometry if g.projective)
        print(
            f"{name:20s} |Omega|={len(res.omega.cones):3d} "
            f"fan={len(res.fan.cones):3d} "
            f"collections={len(res.collections):3d} "
            f"interior={len(res.interior):3d} "
            f"qp={n_qp:3d} proj={n_proj:3d} "
            f"({dt:.2f}s)"
        )
        if args.full:
            print(render_text(classification_payload(doc, res)))


if __name__ == "__main__":
    main()
