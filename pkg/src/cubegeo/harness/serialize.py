"""JSON formats and deterministic report I/O.

Formats (all 0-based directions, all keys in fixed order):

  graph     {"n": int, "vertices": [int], "edges": [[lo, dir]]}
  colouring {"n": int, "pairs": [[lo, dir, "red"|"blue"]]}   every edge
  family    {"n": int, "sets": [int]}
  report    {"task", "parameters", "seed", "records", "aggregate", "pass"}

Serialization is canonical (sorted members, fixed key order, indent 2,
trailing newline), so identical runs produce byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from ..colourings import Colour, EdgeColouring
from ..core import CubeSubgraph, Edge, make_subgraph
from ..setfamilies import SetFamily

__all__ = [
    "ParseError",
    "Report",
    "dumps",
    "instance_to_obj",
    "load_instance",
    "load_json",
    "obj_to_colouring",
    "obj_to_graph",
    "obj_to_family",
    "colouring_to_obj",
    "family_to_obj",
    "graph_to_obj",
    "save_json",
]


class ParseError(ValueError):
    """A file could not be parsed or validated; the message carries
    line/field diagnostics."""


@dataclass
class Report:
    """One verification or search run: enough to reproduce it exactly
    (parameters + seed) plus per-record results and aggregates."""

    task: str
    parameters: dict
    seed: int
    records: list = field(default_factory=list)
    aggregate: dict = field(default_factory=dict)
    passed: bool = True

    def to_obj(self) -> dict:
        return {
            "task": self.task,
            "parameters": self.parameters,
            "seed": self.seed,
            "records": self.records,
            "aggregate": self.aggregate,
            "pass": self.passed,
        }


def graph_to_obj(g: CubeSubgraph) -> dict:
    return {
        "n": g.n,
        "vertices": list(g.vertices),
        "edges": [[e.lo, e.dir] for e in g.edges],
    }


def colouring_to_obj(c: EdgeColouring) -> dict:
    return {
        "n": c.n,
        "pairs": [[lo, dir, colour.value] for lo, dir, colour in c.pairs()],
    }


def family_to_obj(fam: SetFamily) -> dict:
    return {"n": fam.n, "sets": list(fam.sets)}


def instance_to_obj(instance) -> dict:
    if isinstance(instance, CubeSubgraph):
        return graph_to_obj(instance)
    if isinstance(instance, EdgeColouring):
        return colouring_to_obj(instance)
    if isinstance(instance, SetFamily):
        return family_to_obj(instance)
    raise TypeError(f"cannot serialize {type(instance).__name__}")


def _field(obj: dict, name: str, kind: type):
    if name not in obj:
        raise ParseError(f"missing field {name!r}")
    value = obj[name]
    if not isinstance(value, kind):
        raise ParseError(f"field {name!r} should be {kind.__name__}, got {type(value).__name__}")
    return value


def obj_to_graph(obj: dict) -> CubeSubgraph:
    n = _field(obj, "n", int)
    vertices = _field(obj, "vertices", list)
    raw_edges = _field(obj, "edges", list)
    edges = []
    for i, item in enumerate(raw_edges):
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, int) for x in item)):
            raise ParseError(f"edges[{i}] should be [lo, dir], got {item!r}")
        edges.append(Edge(item[0], item[1]))
    try:
        return make_subgraph(n, vertices, edges)
    except (ValueError, TypeError) as exc:
        raise ParseError(f"invalid graph: {exc}") from exc


def obj_to_colouring(obj: dict) -> EdgeColouring:
    n = _field(obj, "n", int)
    raw = _field(obj, "pairs", list)
    pairs = []
    for i, item in enumerate(raw):
        if not (isinstance(item, list) and len(item) == 3):
            raise ParseError(f"pairs[{i}] should be [lo, dir, colour], got {item!r}")
        lo, dir, colour = item
        if not isinstance(lo, int) or not isinstance(dir, int):
            raise ParseError(f"pairs[{i}] endpoints should be ints")
        try:
            pairs.append((lo, dir, Colour(colour)))
        except ValueError as exc:
            raise ParseError(f"pairs[{i}] colour {colour!r} is not 'red' or 'blue'") from exc
    try:
        return EdgeColouring.from_pairs(n, pairs)
    except ValueError as exc:
        raise ParseError(f"invalid colouring: {exc}") from exc


def obj_to_family(obj: dict) -> SetFamily:
    n = _field(obj, "n", int)
    sets = _field(obj, "sets", list)
    if not all(isinstance(s, int) for s in sets):
        raise ParseError("family members should be ints")
    try:
        return SetFamily.of(n, sets)
    except ValueError as exc:
        raise ParseError(f"invalid family: {exc}") from exc


def obj_to_instance(obj: dict):
    """Sniff the instance type from its fields."""
    if not isinstance(obj, dict):
        raise ParseError(f"expected a JSON object, got {type(obj).__name__}")
    if "vertices" in obj:
        return obj_to_graph(obj)
    if "pairs" in obj:
        return obj_to_colouring(obj)
    if "sets" in obj:
        return obj_to_family(obj)
    raise ParseError("object is neither a graph, a colouring, nor a family")


def dumps(obj: Any) -> str:
    """Canonical JSON text: fixed key order as constructed, indent 2,
    newline-terminated."""
    return json.dumps(obj, indent=2) + "\n"


def save_json(path: str, obj: Any) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(obj))


def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def load_instance(path: str):
    return obj_to_instance(load_json(path))
