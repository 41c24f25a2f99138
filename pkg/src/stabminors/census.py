"""Census file emitters (text table and JSON).

JSON schema (keys in this order)::

    {
      "format": "stabminors-census", "version": str, "n": int,
      "conventions": {...}, "total_points": int, "orbit_count": int,
      "orbits": [
        {"orbit_id": int, "label": str | null, "size": int,
         "canonical_key": int,
         "canonical_point_bitmask": "[z_0:z_1:...]",
         "canonical_point_graded_lex": "[...]",
         "representative_edges": "1-2,2-3",
         "published_state_count": int, "derived_state_count": int}
      ]
    }
"""

from __future__ import annotations

import json
from typing import Any

from . import __version__
from .graphstates import format_edges
from .orbits import OrbitReport, partition

CONVENTIONS = {
    "coordinates": "z_T = minor with mu rows outside T and nu rows inside T",
    "index_order_internal": "bitmask",
    "index_order_printed": "graded-lex",
    "graph_point": "principal minors of theta (columns [I; theta])",
    "canonical_point": "minimum bitmask integer key in the orbit",
    "orbit_order": "(size, canonical key)",
    "published_state_count": "4^n * size",
    "derived_state_count": "2^n * size",
}

FIELDS = (
    "orbit_id",
    "label",
    "size",
    "canonical_key",
    "canonical_point_bitmask",
    "canonical_point_graded_lex",
    "representative_edges",
    "published_state_count",
    "derived_state_count",
)


def record(r: OrbitReport) -> dict[str, Any]:
    return {
        "orbit_id": r.orbit_id,
        "label": r.label,
        "size": r.size,
        "canonical_key": r.canonical_point.bits,
        "canonical_point_bitmask": r.canonical_point.format("bitmask"),
        "canonical_point_graded_lex": r.canonical_point.format("graded-lex"),
        "representative_edges": format_edges(r.representative_graph),
        "published_state_count": r.published_state_count,
        "derived_state_count": r.derived_state_count,
    }


def census_document(n: int) -> dict[str, Any]:
    reports = partition(n)
    return {
        "format": "stabminors-census",
        "version": __version__,
        "n": n,
        "conventions": CONVENTIONS,
        "total_points": sum(r.size for r in reports),
        "orbit_count": len(reports),
        "orbits": [record(r) for r in reports],
    }


def to_json(n: int) -> str:
    return json.dumps(census_document(n), indent=2) + "\n"


def validate_document(doc: dict[str, Any]) -> None:
    """Structural check of a parsed census document; raises ValueError."""
    for key in ("format", "version", "n", "conventions", "total_points", "orbit_count", "orbits"):
        if key not in doc:
            raise ValueError(f"missing key {key!r}")
    if doc["format"] != "stabminors-census":
        raise ValueError("wrong format tag")
    if len(doc["orbits"]) != doc["orbit_count"]:
        raise ValueError("orbit_count does not match records")
    if sum(o["size"] for o in doc["orbits"]) != doc["total_points"]:
        raise ValueError("sizes do not sum to total_points")
    for o in doc["orbits"]:
        if tuple(o) != FIELDS:
            raise ValueError(f"record fields {tuple(o)} differ from {FIELDS}")


def to_table(n: int) -> str:
    reports = partition(n)
    head = ("id", "label", "size", "4^n*size", "2^n*size", "graph", "canonical point (graded-lex)")
    rows = [
        (
            str(r.orbit_id),
            r.label or "-",
            str(r.size),
            str(r.published_state_count),
            str(r.derived_state_count),
            format_edges(r.representative_graph) or "(empty)",
            r.canonical_point.format("graded-lex"),
        )
        for r in reports
    ]
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(head)]
    lines = [f"# n = {n}: orbits {len(reports)}, points {sum(r.size for r in reports)}"]
    lines.append("  ".join(h.ljust(w) for h, w in zip(head, widths)).rstrip())
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"
