"""The JSON instance format.

    {
      "dimension": 2,
      "points": {"1": ["0", "0"], "2": ["4", "0"]},
      "edges": [{"id": "a", "tail": "1", "head": "2", "gain": "-6"}],
      "bias": [["a", "b", "s"]]
    }

Rationals are strings ``"p/q"`` or ``"n"`` (plain JSON integers are also
accepted); floats are rejected.  ``gain`` defaults to ``"0"`` and ``bias``
is optional.  A bias circle may prefix edge ids with ``+`` or ``-``; the
sign is informational only, since a circle is determined by its edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError
from .exactla import format_rational, parse_rational
from .gaingraph import Edge, GainGraph
from .pointconfig import Configuration
from .transport import Triple


@dataclass
class Instance:
    triple: Triple
    bias: list[list[str]] = field(default_factory=list)


def _require(obj: dict, key: str, where: str):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    if key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    return obj[key]


def _rational(value, where: str):
    try:
        return parse_rational(value)
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from None


def loads(text: str) -> Instance:
    try:
        data = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_dict(data)


def _reject_float(text: str):
    raise ParseError(f"floating-point number {text} is not allowed; write a rational string such as \"3/2\"")


def from_dict(data) -> Instance:
    dim = _require(data, "dimension", "instance")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise ParseError("dimension: expected a natural number")
    raw_points = _require(data, "points", "instance")
    if not isinstance(raw_points, dict):
        raise ParseError("points: expected an object mapping vertex labels to coordinate lists")
    points = {}
    for label, coords in raw_points.items():
        if not isinstance(coords, list):
            raise ParseError(f"points[{label!r}]: expected a list of rationals")
        if len(coords) != dim:
            raise ParseError(f"points[{label!r}]: expected {dim} coordinates, got {len(coords)}")
        points[label] = tuple(_rational(x, f"points[{label!r}][{i}]") for i, x in enumerate(coords))
    raw_edges = _require(data, "edges", "instance")
    if not isinstance(raw_edges, list):
        raise ParseError("edges: expected a list")
    edges, gains = [], {}
    for i, item in enumerate(raw_edges):
        where = f"edges[{i}]"
        eid = _require(item, "id", where)
        tail = _require(item, "tail", where)
        head = _require(item, "head", where)
        for name, value in (("id", eid), ("tail", tail), ("head", head)):
            if not isinstance(value, str):
                raise ParseError(f"{where}.{name}: expected a string")
        edges.append(Edge(eid, tail, head))
        gains[eid] = _rational(item.get("gain", "0"), f"{where}.gain")
    bias = []
    for i, circle in enumerate(data.get("bias", [])):
        if not isinstance(circle, list) or not all(isinstance(x, str) for x in circle):
            raise ParseError(f"bias[{i}]: expected a list of edge ids")
        bias.append([x.lstrip("+-") for x in circle])
    config = Configuration(dim, points)
    graph = GainGraph(list(points), edges, gains)
    return Instance(Triple(config, graph), bias)


def load(path) -> Instance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def to_dict(inst: Instance | Triple) -> dict:
    if isinstance(inst, Triple):
        inst = Instance(inst)
    c, g = inst.triple.configuration, inst.triple.graph
    out = {
        "dimension": c.dim,
        "points": {str(v): [format_rational(x) for x in c.point(v)] for v in g.vertices},
        "edges": [
            {"id": e.id, "tail": str(e.tail), "head": str(e.head), "gain": format_rational(g.gains[e.id])}
            for e in g.edges
        ],
    }
    for v, p in c.points.items():
        out["points"].setdefault(str(v), [format_rational(x) for x in p])
    if inst.bias:
        out["bias"] = [list(circle) for circle in inst.bias]
    return out


def dumps(inst: Instance | Triple) -> str:
    return json.dumps(to_dict(inst), indent=2) + "\n"


def save(inst: Instance | Triple, path) -> None:
    Path(path).write_text(dumps(inst))
