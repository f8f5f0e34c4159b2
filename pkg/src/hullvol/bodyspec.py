"""JSON body documents.

One body per file::

    {"kind": "polygon", "vertices": [["0", "0"], ["1", "0"], ["0", "1"]]}
    {"kind": "regular_gon", "m": 5, "radius": 1, "tol": 1e-9}
    {"kind": "disk_gon", "m": 4096}
    {"kind": "polytope", "vertices": [[0, 0, 0], [1, 0, 0], ...]}
    {"kind": "ball", "dim": 3, "radius": 1}
    {"kind": "ellipsoid", "semiaxes": [1, 2, 3], "center": [0, 0, 0], "orientation": [[...]]}

Polygon coordinates given as strings or integers are exact rationals;
JSON floats make the polygon float-backed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .bodies import Ball, Ellipsoid, Polytope
from .convex import ConvexPolygon, Vec2, format_rational, hull2, regular_polygon, to_rational
from .errors import DegenerateBody, DegenerateInput, HullvolError, NotConvexPolygon, ParseError

KINDS = ("polygon", "polytope", "ball", "ellipsoid", "regular_gon", "disk_gon")


@dataclass
class BodySpec:
    kind: str
    params: dict
    body: object
    notes: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return 2 if isinstance(self.body, ConvexPolygon) else self.body.dim


def _coord(x):
    if isinstance(x, float):
        return x
    return to_rational(x)


def _require(doc: dict, *keys):
    missing = [k for k in keys if k not in doc]
    if missing:
        raise ParseError(f"{doc.get('kind')}: missing field(s) {', '.join(missing)}")


def _floats(xs, what: str) -> list:
    try:
        return [float(to_rational(x)) if isinstance(x, str) else float(x) for x in xs]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad {what}: {xs!r}") from exc


def parse_body(doc) -> BodySpec:
    """Build a body from a parsed JSON document."""
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ParseError("body document must be an object with a 'kind'")
    kind = doc["kind"]
    if kind not in KINDS:
        raise ParseError(f"unknown body kind {kind!r}; expected one of {', '.join(KINDS)}")
    notes = []
    try:
        if kind == "polygon":
            _require(doc, "vertices")
            pts = [Vec2(_coord(p[0]), _coord(p[1])) for p in doc["vertices"]]
            body = hull2(pts)
            if len(body) != len(pts):
                raise ParseError("polygon vertices are not in convex position")
        elif kind in ("regular_gon", "disk_gon"):
            _require(doc, "m")
            tol = float(doc.get("tol", 1e-9))
            radius = to_rational(doc.get("radius", 1))
            body = regular_polygon(int(doc["m"]), radius=radius, tol=tol)
            notes.append(f"rational vertex approximation, each coordinate within {tol:g}")
        elif kind == "polytope":
            _require(doc, "vertices")
            body = Polytope([_floats(v, "vertex") for v in doc["vertices"]])
        elif kind == "ball":
            _require(doc, "dim")
            center = doc.get("center")
            body = Ball(int(doc["dim"]), float(doc.get("radius", 1.0)), None if center is None else tuple(_floats(center, "center")))
        else:
            _require(doc, "semiaxes")
            axes = _floats(doc["semiaxes"], "semiaxes")
            center = _floats(doc.get("center", [0.0] * len(axes)), "center")
            orient = doc.get("orientation")
            body = Ellipsoid(tuple(center), tuple(axes), None if orient is None else [_floats(r, "orientation") for r in orient])
    except ParseError:
        raise
    except (NotConvexPolygon, DegenerateInput, DegenerateBody) as exc:
        raise ParseError(f"{kind}: {exc}") from exc
    except (TypeError, ValueError, IndexError, KeyError) as exc:
        raise ParseError(f"{kind}: malformed parameters ({exc})") from exc
    except HullvolError as exc:
        raise ParseError(f"{kind}: {exc}") from exc
    return BodySpec(kind, {k: v for k, v in doc.items() if k != "kind"}, body, notes)


def load_body(path) -> BodySpec:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read body file {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return parse_body(doc)


def polygon_document(P: ConvexPolygon) -> dict:
    if P.exact:
        verts = [[format_rational(v.x), format_rational(v.y)] for v in P.vertices]
    else:
        verts = [list(v.to_float()) for v in P.vertices]
    return {"kind": "polygon", "vertices": verts}
