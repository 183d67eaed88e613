"""JSON file formats and DOT export.

All emitters are canonical: cells sorted by (dim, id), boundaries and
map entries sorted by id, two-space indentation. Loading a canonical
file and saving it again reproduces it byte for byte.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .complexes import (
    Cell,
    Complex,
    DualMultigraph,
    ValidationReport,
    Violation,
    build_complex,
)
from .covers import CoverMap, SideTour
from .errors import ParseError
from .matroid import CircletDecomposition

__all__ = [
    "complex_to_dict",
    "complex_from_dict",
    "save_complex",
    "load_complex",
    "decomposition_to_dict",
    "decomposition_from_dict",
    "cover_to_dict",
    "cover_from_dict",
    "load_cover",
    "tour_to_list",
    "report_to_dict",
    "dumps",
    "dual_to_dot",
]


def dumps(doc: Any) -> str:
    """Canonical JSON text: 2-space indent, trailing newline."""
    return json.dumps(doc, indent=2) + "\n"


# ---- complexes --------------------------------------------------------


def complex_to_dict(k: Complex) -> dict[str, Any]:
    cells = [
        {"id": c.id, "dim": c.dim, "boundary": sorted(c.boundary)}
        for c in k
    ]
    return {"dimension": k.dim, "cells": cells}


def complex_from_dict(doc: Any) -> Complex:
    if not isinstance(doc, dict):
        raise ParseError("complex document must be a JSON object")
    try:
        dimension = doc["dimension"]
        raw_cells = doc["cells"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"complex document missing key: {exc}") from exc
    if not isinstance(dimension, int) or not isinstance(raw_cells, list):
        raise ParseError("bad types for 'dimension' or 'cells'")
    cells = []
    for entry in raw_cells:
        if not isinstance(entry, dict):
            raise ParseError("each cell must be a JSON object")
        try:
            cid, dim, boundary = entry["id"], entry["dim"], entry["boundary"]
        except KeyError as exc:
            raise ParseError(f"cell entry missing key {exc}") from exc
        if (
            not isinstance(cid, str)
            or not isinstance(dim, int)
            or not isinstance(boundary, list)
            or not all(isinstance(b, str) for b in boundary)
        ):
            raise ParseError(f"bad cell entry for id {cid!r}")
        cells.append(Cell(cid, dim, frozenset(boundary)))
    k = build_complex(cells)
    if k.dim != dimension:
        raise ParseError(
            f"declared dimension {dimension} but cells reach {k.dim}"
        )
    return k


def save_complex(k: Complex, path: str | Path) -> None:
    Path(path).write_text(dumps(complex_to_dict(k)))


def load_complex(path: str | Path) -> Complex:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    return complex_from_dict(doc)


# ---- decompositions ---------------------------------------------------


def decomposition_to_dict(d: CircletDecomposition) -> dict[str, Any]:
    return {"parts": [list(part) for part in d.parts]}


def decomposition_from_dict(doc: Any) -> CircletDecomposition:
    if not isinstance(doc, dict) or not isinstance(doc.get("parts"), list):
        raise ParseError("decomposition document needs a 'parts' list")
    parts = []
    for part in doc["parts"]:
        if not isinstance(part, list) or not all(
            isinstance(f, str) for f in part
        ):
            raise ParseError("each part must be a list of facet ids")
        parts.append(tuple(sorted(part)))
    return CircletDecomposition(parts=tuple(parts))


# ---- covers -----------------------------------------------------------


def cover_to_dict(cover: CoverMap) -> dict[str, Any]:
    entries = [
        {"from": src, "to": cover.cell_map[src]}
        for src in sorted(cover.cell_map)
    ]
    return {
        "source": complex_to_dict(cover.source),
        "target": complex_to_dict(cover.target),
        "map": entries,
    }


def cover_from_dict(doc: Any, base_dir: Path | None = None) -> CoverMap:
    """Parse a cover; the target may be inline or a file reference."""
    if not isinstance(doc, dict):
        raise ParseError("cover document must be a JSON object")
    for key in ("source", "target", "map"):
        if key not in doc:
            raise ParseError(f"cover document missing {key!r}")
    source = complex_from_dict(doc["source"])
    target_doc = doc["target"]
    if isinstance(target_doc, str):
        ref = Path(target_doc)
        if base_dir is not None and not ref.is_absolute():
            ref = base_dir / ref
        target = load_complex(ref)
    else:
        target = complex_from_dict(target_doc)
    if not isinstance(doc["map"], list):
        raise ParseError("cover 'map' must be a list")
    cell_map: dict[str, str] = {}
    for entry in doc["map"]:
        if (
            not isinstance(entry, dict)
            or not isinstance(entry.get("from"), str)
            or not isinstance(entry.get("to"), str)
        ):
            raise ParseError("each map entry needs string 'from' and 'to'")
        if entry["from"] in cell_map:
            raise ParseError(f"map lists {entry['from']!r} twice")
        cell_map[entry["from"]] = entry["to"]
    return CoverMap(source=source, target=target, cell_map=cell_map)


def load_cover(path: str | Path) -> CoverMap:
    p = Path(path)
    try:
        doc = json.loads(p.read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    return cover_from_dict(doc, base_dir=p.parent)


# ---- tours and reports ------------------------------------------------


def tour_to_list(tour: SideTour) -> list[str]:
    return list(tour.sides)


def report_to_dict(report: ValidationReport) -> dict[str, Any]:
    return {
        "passed": report.passed,
        "violations": [
            {"rule": v.rule, "cells": list(v.cells), "message": v.message}
            for v in report.violations
        ],
    }


# ---- DOT --------------------------------------------------------------


def dual_to_dot(g: DualMultigraph, name: str = "dual") -> str:
    """Render a dual multigraph; parallel edges collapse to one line.

    Each facet pair gets a single edge labeled with its shared sides and,
    when there are several, a multiplicity marker and a heavier stroke.
    """
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    grouped: dict[tuple[str, str], list[str]] = {}
    for e in g.edges:
        grouped.setdefault((e.left, e.right), []).append(e.side)
    for (a, b), sides in sorted(grouped.items()):
        sides = sorted(sides)
        label = ", ".join(sides)
        if len(sides) > 1:
            label = f"x{len(sides)}: {label}"
        width = 1.0 + 0.6 * (len(sides) - 1)
        lines.append(
            f'  "{a}" -- "{b}" [label="{label}", penwidth={width:.1f}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
