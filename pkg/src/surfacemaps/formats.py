"""Canonical JSON and OFF serialization.

JSON layout is fixed so identical inputs serialize to identical bytes:

    surface: {"vertices": [...], "triangles": [[a,b,c], ...],
              "positive_triangle": [a,b,c] | null}
    map:     {"domain": <surface or path string>, "codomain": <...>,
              "assignment": {label: label, ...}}

Arrays follow the canonical surface form (vertices sorted, triangles
ascending and sorted); assignment keys are sorted; the positive triangle
keeps its stored, possibly non-ascending, order because that order carries
the orientation.  OFF output is export-only: labels are dropped in favour
of indices and the placeholder coordinates are all zero, which is enough
for mesh viewers that only read connectivity.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .maps import DegreeReport, SignedPreimageCount, SimplicialVertexMap
from .surface import TriangulatedSurface


class FormatError(ValueError):
    """Input document does not match the expected JSON shape."""


def surface_to_dict(surface: TriangulatedSurface) -> dict[str, Any]:
    return {
        "vertices": list(surface.vertices),
        "triangles": [list(f) for f in surface.facets],
        "positive_triangle": list(surface.positive_reference)
        if surface.positive_reference is not None
        else None,
    }


def surface_from_dict(doc: Any) -> TriangulatedSurface:
    if not isinstance(doc, dict):
        raise FormatError("surface document must be a JSON object")
    try:
        vertices = doc["vertices"]
        triangles = doc["triangles"]
    except KeyError as exc:
        raise FormatError(f"surface document is missing key {exc}") from None
    reference = doc.get("positive_triangle")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise FormatError("'vertices' must be a list of strings")
    if not isinstance(triangles, list) or not all(
        isinstance(t, list) and len(t) == 3 and all(isinstance(v, str) for v in t) for t in triangles
    ):
        raise FormatError("'triangles' must be a list of 3-element string lists")
    if reference is not None and (
        not isinstance(reference, list) or len(reference) != 3 or not all(isinstance(v, str) for v in reference)
    ):
        raise FormatError("'positive_triangle' must be null or a 3-element string list")
    try:
        return TriangulatedSurface.from_facets(triangles, vertices=vertices, positive_reference=reference)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def dumps_json(doc: Any) -> str:
    """Serialize a document with the fixed canonical layout (2-space indent, LF)."""
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def dump_surface(surface: TriangulatedSurface) -> str:
    return dumps_json(surface_to_dict(surface))


def load_surface(path: str | Path) -> TriangulatedSurface:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: not valid JSON ({exc})") from None
    return surface_from_dict(doc)


def map_to_dict(f: SimplicialVertexMap) -> dict[str, Any]:
    return {
        "domain": surface_to_dict(f.domain),
        "codomain": surface_to_dict(f.codomain),
        "assignment": {v: f.assignment[v] for v in f.domain.vertices},
    }


def map_from_dict(doc: Any, base_dir: str | Path | None = None) -> SimplicialVertexMap:
    """Parse a map document; domain/codomain may be inline or path strings.

    Path strings are resolved relative to base_dir (normally the directory
    of the map file itself).
    """
    if not isinstance(doc, dict):
        raise FormatError("map document must be a JSON object")
    for key in ("domain", "codomain", "assignment"):
        if key not in doc:
            raise FormatError(f"map document is missing key '{key}'")

    def load_side(entry: Any) -> TriangulatedSurface:
        if isinstance(entry, str):
            path = Path(entry)
            if base_dir is not None and not path.is_absolute():
                path = Path(base_dir) / path
            return load_surface(path)
        return surface_from_dict(entry)

    assignment = doc["assignment"]
    if not isinstance(assignment, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in assignment.items()
    ):
        raise FormatError("'assignment' must be an object mapping labels to labels")
    try:
        return SimplicialVertexMap.build(load_side(doc["domain"]), load_side(doc["codomain"]), assignment)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def load_map(path: str | Path) -> SimplicialVertexMap:
    path = Path(path)
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: not valid JSON ({exc})") from None
    return map_from_dict(doc, base_dir=path.parent)


def _count_to_dict(count: SignedPreimageCount) -> dict[str, Any]:
    return {
        "target": list(count.target),
        "target_sign": count.target_sign,
        "positive_count": count.positive_count,
        "negative_count": count.negative_count,
        "alg": count.alg,
    }


def degree_report_to_dict(report: DegreeReport) -> dict[str, Any]:
    return {
        "degree": report.degree,
        "degenerate_facets": report.degenerate_facets,
        "nondegenerate_facets": report.nondegenerate_facets,
        "domain_reference": list(report.domain_reference),
        "codomain_reference": list(report.codomain_reference),
        "per_triangle": [_count_to_dict(c) for c in report.per_triangle],
    }


def surface_to_off(surface: TriangulatedSurface) -> str:
    """OFF text: counts line 'n f 0', zero coordinates, facets as index triples.

    Vertices are numbered by lexicographic label order, the same order as
    the canonical JSON vertex array.
    """
    index: Mapping[str, int] = {v: i for i, v in enumerate(surface.vertices)}
    lines = ["OFF", f"{len(surface.vertices)} {len(surface.facets)} 0"]
    lines.extend("0 0 0" for _ in surface.vertices)
    for a, b, c in surface.facets:
        lines.append(f"3 {index[a]} {index[b]} {index[c]}")
    return "\n".join(lines) + "\n"
