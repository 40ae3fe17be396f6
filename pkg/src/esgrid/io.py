"""Serialization of point sets (plain text and JSON documents) and SVG
rendering of the constructed configurations."""

from __future__ import annotations

import json
from typing import Optional

from .errors import DuplicatePoint, EmptySet, ParseError
from .geometry import Point
from .pointset import ConstructionParams, Kind, PointSet
from .verify import VerificationReport, convex_hull

FORMAT_TEXT = "TEXT"
FORMAT_JSON = "JSON"
FORMAT_VERSION = 1

_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd",
            "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"]


def _params_to_dict(params: ConstructionParams) -> dict:
    d: dict = {"kind": params.kind.value}
    for field in ("r", "k", "l", "t"):
        value = getattr(params, field)
        if value is not None:
            d[field] = value
    if params.kind in (Kind.SKL_OPTIMIZED, Kind.ES_OPTIMIZED):
        d["unit_separation"] = params.last_step_unit_separation
    return d


def _params_from_dict(d: dict) -> ConstructionParams:
    try:
        kind = Kind(d["kind"])
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad construction metadata: {exc}")
    return ConstructionParams(
        kind,
        r=d.get("r"), k=d.get("k"), l=d.get("l"), t=d.get("t"),
        last_step_unit_separation=d.get("unit_separation", True))


def serialize(s: PointSet, format: str = FORMAT_TEXT,
              report: Optional[VerificationReport] = None) -> bytes:
    """TEXT: one "x y" line per point. JSON: a document with provenance.
    Output is deterministic for fixed inputs."""
    if not len(s):
        raise EmptySet("cannot serialize an empty point set")
    if format == FORMAT_TEXT:
        return "".join(f"{p.x} {p.y}\n" for p in s).encode("ascii")
    if format != FORMAT_JSON:
        raise ValueError(f"unknown format {format!r}")
    doc: dict = {"format_version": FORMAT_VERSION}
    if s.params is not None:
        doc["construction"] = _params_to_dict(s.params)
        doc["label"] = s.params.label()
    doc["points"] = [[str(p.x), str(p.y)] for p in s]
    if s.component_spans is not None:
        doc["component_spans"] = [list(sp) for sp in s.component_spans]
    if report is not None:
        doc["report"] = report.summary()
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("ascii")


def deserialize(data: bytes, format: str = FORMAT_TEXT) -> PointSet:
    """Inverse of serialize; coordinates round-trip losslessly at any size."""
    text = data.decode("utf-8")
    if format == FORMAT_TEXT:
        pts = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"expected 'x y', got {line!r}", line=lineno)
            try:
                pts.append(Point(int(parts[0]), int(parts[1])))
            except ValueError:
                raise ParseError(f"bad integer in {line!r}", line=lineno)
        if not pts:
            raise ParseError("no points in input")
        return PointSet(tuple(pts))
    if format != FORMAT_JSON:
        raise ValueError(f"unknown format {format!r}")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}")
    if not isinstance(doc, dict) or "points" not in doc:
        raise ParseError("JSON document lacks a points array")
    try:
        pts = tuple(Point(int(x), int(y)) for x, y in doc["points"])
    except (TypeError, ValueError):
        raise ParseError("points must be pairs of integer strings")
    if not pts:
        raise ParseError("no points in input")
    params = None
    if "construction" in doc:
        params = _params_from_dict(doc["construction"])
    spans = None
    if "component_spans" in doc:
        spans = tuple((int(a), int(b), str(lab))
                      for a, b, lab in doc["component_spans"])
    return PointSet(pts, params=params, component_spans=spans)


def sniff_format(data: bytes) -> str:
    return FORMAT_JSON if data.lstrip()[:1] == b"{" else FORMAT_TEXT


def _block_color(s: PointSet) -> dict:
    colors = {}
    if s.component_spans:
        for bi, (start, stop, _label) in enumerate(s.component_spans):
            for i in range(start, stop):
                colors[i] = _PALETTE[bi % len(_PALETTE)]
    return colors


def render_svg(s: PointSet, canvas_width_px: int = 800,
               point_radius_px: int = 4, show_hull: bool = False,
               show_blocks: bool = False) -> bytes:
    """Draw the set as SVG circles; y grows upward as in a math plot.
    Optionally overlays the convex hull and colors points per block."""
    if not len(s):
        raise EmptySet("cannot render an empty point set")
    pts = list(s)
    minx = min(p.x for p in pts)
    miny = min(p.y for p in pts)
    spanx = max(p.x for p in pts) - minx
    spany = max(p.y for p in pts) - miny
    margin = point_radius_px + 10
    inner = max(canvas_width_px - 2 * margin, 1)
    scale = inner / spanx if spanx else 1.0
    height = int(round(spany * scale)) + 2 * margin

    def to_px(p: Point):
        x = margin + (p.x - minx) * scale
        y = height - margin - (p.y - miny) * scale
        return x, y

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{canvas_width_px}" height="{height}" '
        f'viewBox="0 0 {canvas_width_px} {height}">',
        f'<rect width="{canvas_width_px}" height="{height}" fill="white"/>',
    ]
    if show_hull and len(pts) >= 3:
        hull = convex_hull(pts)
        coords = " ".join("%.3f,%.3f" % to_px(p) for p in hull)
        out.append(f'<polygon points="{coords}" fill="none" '
                   f'stroke="#888888" stroke-width="1"/>')
    colors = _block_color(s) if show_blocks else {}
    for i, p in enumerate(pts):
        x, y = to_px(p)
        fill = colors.get(i, "#000000")
        out.append('<circle cx="%.3f" cy="%.3f" r="%d" fill="%s"/>'
                   % (x, y, point_radius_px, fill))
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("ascii")
