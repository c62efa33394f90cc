"""JSON model files and DOT export.

A model file carries a format version plus an algebra, a graph, or an open
graph (and optionally a morphism's index arrays).  Vertex and edge ids in a
file may be strings or integers; they are normalized to strings and mapped
to dense internal indices at parse time.  Emission is canonical: sorted
keys, two-space indent, trailing newline, so identical models give
byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from .algebra import (
    BuiltinAlgebra,
    Flags,
    LabelAlgebra,
    TableAlgebra,
    algebra_name,
    named_algebra,
)
from .graphs import Graph, LabeledGraph
from .open_graphs import OpenGraph

FORMAT_VERSION = 1


class ModelFormatError(ValueError):
    """A rejected model file; `code` distinguishes the failure classes."""

    def __init__(self, code: str, message: str, line: Optional[int] = None, column: Optional[int] = None):
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"[{code}] {message}{location}")
        self.code = code
        self.line = line
        self.column = column


@dataclass
class ModelFile:
    format_version: int = FORMAT_VERSION
    algebra: Optional[LabelAlgebra] = None
    graph: Optional[LabeledGraph] = None
    open_graph: Optional[OpenGraph] = None
    morphism: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    vertex_ids: tuple[str, ...] = ()
    edge_ids: tuple[str, ...] = ()

    @property
    def any_graph(self) -> Optional[LabeledGraph]:
        if self.graph is not None:
            return self.graph
        if self.open_graph is not None:
            return self.open_graph.inner
        return None


def _require(condition: bool, code: str, message: str) -> None:
    if not condition:
        raise ModelFormatError(code, message)


def _as_id(value: Any, where: str) -> str:
    _require(
        isinstance(value, (str, int)) and not isinstance(value, bool),
        "schema",
        f"{where}: ids must be strings or integers, got {value!r}",
    )
    return str(value)


def parse_algebra(obj: Any) -> LabelAlgebra:
    if isinstance(obj, str):
        try:
            return named_algebra(obj)
        except KeyError:
            raise ModelFormatError("unknown-algebra", f"unknown algebra name {obj!r}") from None
    _require(isinstance(obj, dict), "schema", "algebra must be a name or an object")
    kind = obj.get("kind")
    if kind == "builtin":
        name = obj.get("builtin_id")
        try:
            return BuiltinAlgebra(name)
        except (ValueError, TypeError):
            raise ModelFormatError("unknown-algebra", f"unknown builtin {name!r}") from None
    _require(kind == "finite-table", "schema", f"algebra kind must be 'finite-table' or 'builtin', got {kind!r}")
    _require(
        isinstance(obj.get("elements"), list) and all(isinstance(e, str) for e in obj["elements"]),
        "schema",
        "algebra elements must be a list of strings",
    )
    elements = tuple(obj["elements"])
    n = len(elements)

    def read_table(key: str, required: bool):
        table = obj.get(key)
        if table is None:
            _require(not required, "schema", f"algebra is missing {key}")
            return None
        _require(isinstance(table, list), "bad-table", f"{key} must be a flat row-major list")
        _require(len(table) == n * n, "bad-table", f"{key} has {len(table)} entries, expected {n * n}")
        for v in table:
            _require(
                isinstance(v, int) and not isinstance(v, bool) and 0 <= v < n,
                "bad-table",
                f"{key} entry {v!r} is not an element index",
            )
        return tuple(table)

    mul_table = read_table("mul_table", required=True)
    add_table = read_table("add_table", required=False)
    unit = obj.get("unit")
    _require(isinstance(unit, int) and 0 <= unit < n, "bad-table", f"unit {unit!r} is not an element index")
    zero = obj.get("zero")
    if add_table is not None:
        _require(isinstance(zero, int) and 0 <= zero < n, "bad-table", f"zero {zero!r} is not an element index")
    else:
        _require(zero is None, "schema", "zero given without an add_table")
    flags_obj = obj.get("flags", {})
    _require(isinstance(flags_obj, dict), "schema", "flags must be an object")
    flags = Flags(
        commutative=bool(flags_obj.get("commutative", False)),
        cancellative=bool(flags_obj.get("cancellative", False)),
    )
    return TableAlgebra(elements, mul_table, unit, add_table, zero, flags)


def algebra_to_json(algebra: LabelAlgebra) -> Any:
    name = algebra_name(algebra)
    if name is not None:
        return name
    assert isinstance(algebra, TableAlgebra)
    obj: dict[str, Any] = {
        "kind": "finite-table",
        "elements": list(algebra.elements),
        "mul_table": list(algebra.mul_table),
        "unit": algebra.unit,
        "flags": {
            "commutative": algebra.flags.commutative,
            "cancellative": algebra.flags.cancellative,
        },
    }
    if algebra.add_table is not None:
        obj["add_table"] = list(algebra.add_table)
        obj["zero"] = algebra.zero_index
    return obj


def parse_graph(obj: Any):
    """Parse a graph object; returns (LabeledGraph, vertex_ids, edge_ids)."""
    _require(isinstance(obj, dict), "schema", "graph must be an object")
    _require("algebra" in obj, "schema", "graph is missing its algebra")
    algebra = parse_algebra(obj["algebra"])
    vertices = obj.get("vertices")
    edges = obj.get("edges", [])
    _require(isinstance(vertices, list), "schema", "graph.vertices must be a list")
    _require(isinstance(edges, list), "schema", "graph.edges must be a list")

    vertex_ids: list[str] = []
    names: list[str] = []
    index: dict[str, int] = {}
    for entry in vertices:
        _require(isinstance(entry, dict) and "id" in entry, "schema", "each vertex needs an id")
        vid = _as_id(entry["id"], "vertex")
        _require(vid not in index, "schema", f"duplicate vertex id {vid!r}")
        index[vid] = len(vertex_ids)
        vertex_ids.append(vid)
        name = entry.get("name", vid)
        _require(isinstance(name, str), "schema", f"vertex {vid!r}: name must be a string")
        names.append(name)

    edge_ids: list[str] = []
    seen_edges: set[str] = set()
    src: list[int] = []
    tgt: list[int] = []
    labels: list = []
    for entry in edges:
        _require(isinstance(entry, dict) and "id" in entry, "schema", "each edge needs an id")
        eid = _as_id(entry["id"], "edge")
        _require(eid not in seen_edges, "schema", f"duplicate edge id {eid!r}")
        seen_edges.add(eid)
        edge_ids.append(eid)
        for key in ("src", "tgt"):
            _require(key in entry, "schema", f"edge {eid!r} is missing {key}")
            endpoint = _as_id(entry[key], f"edge {eid!r} {key}")
            if endpoint not in index:
                raise ModelFormatError(
                    "dangling-id", f"edge {eid!r}: {key} {endpoint!r} is not a vertex id"
                )
            (src if key == "src" else tgt).append(index[endpoint])
        _require("label" in entry, "schema", f"edge {eid!r} is missing its label")
        try:
            labels.append(algebra.parse_label(entry["label"]))
        except KeyError as exc:
            raise ModelFormatError(
                "unknown-element", f"edge {eid!r}: {exc.args[0]}"
            ) from None
    graph = LabeledGraph(Graph(tuple(names), tuple(src), tuple(tgt)), algebra, tuple(labels))
    return graph, tuple(vertex_ids), tuple(edge_ids)


def graph_to_json(
    g: LabeledGraph,
    vertex_ids: Optional[tuple[str, ...]] = None,
    edge_ids: Optional[tuple[str, ...]] = None,
) -> dict:
    vertex_ids = vertex_ids or tuple(f"v{i}" for i in range(g.graph.n_vertices))
    edge_ids = edge_ids or tuple(f"e{i}" for i in range(g.graph.n_edges))
    return {
        "algebra": algebra_to_json(g.algebra),
        "vertices": [
            {"id": vid, "name": name} for vid, name in zip(vertex_ids, g.graph.vertex_names)
        ],
        "edges": [
            {
                "id": edge_ids[e],
                "src": vertex_ids[g.graph.edge_src[e]],
                "tgt": vertex_ids[g.graph.edge_tgt[e]],
                "label": _label_json(g, e),
            }
            for e in range(g.graph.n_edges)
        ],
    }


def _label_json(g: LabeledGraph, e: int) -> Any:
    value = g.labels[e]
    if isinstance(g.algebra, TableAlgebra):
        return g.algebra.elements[value]
    if isinstance(value, int):
        return value
    if value.denominator == 1:
        return int(value)
    return str(value)


def parse_open_graph(obj: Any):
    _require(isinstance(obj, dict), "schema", "open_graph must be an object")
    _require("inner" in obj, "schema", "open_graph is missing its inner graph")
    inner, vertex_ids, edge_ids = parse_graph(obj["inner"])
    vertex_index = {vid: i for i, vid in enumerate(vertex_ids)}

    def read_foot(key: str) -> tuple[str, ...]:
        foot = obj.get(key)
        _require(isinstance(foot, list), "schema", f"{key} must be a list of ids")
        ids = [_as_id(v, key) for v in foot]
        _require(len(set(ids)) == len(ids), "schema", f"{key} ids must be distinct")
        return tuple(ids)

    def read_leg(key: str, foot: tuple[str, ...]) -> tuple[int, ...]:
        leg = obj.get(key, {})
        _require(isinstance(leg, dict), "schema", f"{key} must be an object")
        normalized = {_as_id(k, key): v for k, v in leg.items()}
        targets = []
        for name in foot:
            _require(name in normalized, "schema", f"{key} is missing foot element {name!r}")
            vid = _as_id(normalized[name], key)
            if vid not in vertex_index:
                raise ModelFormatError("dangling-id", f"{key}[{name!r}]: {vid!r} is not a vertex id")
            targets.append(vertex_index[vid])
        return tuple(targets)

    left = read_foot("left_foot")
    right = read_foot("right_foot")
    open_graph = OpenGraph(inner, left, right, read_leg("leg_in", left), read_leg("leg_out", right))
    return open_graph, vertex_ids, edge_ids


def open_graph_to_json(og: OpenGraph, vertex_ids=None, edge_ids=None) -> dict:
    vertex_ids = vertex_ids or tuple(f"v{i}" for i in range(og.inner.graph.n_vertices))
    return {
        "inner": graph_to_json(og.inner, vertex_ids, edge_ids),
        "left_foot": list(og.left_foot),
        "right_foot": list(og.right_foot),
        "leg_in": {name: vertex_ids[v] for name, v in zip(og.left_foot, og.leg_in)},
        "leg_out": {name: vertex_ids[v] for name, v in zip(og.right_foot, og.leg_out)},
    }


def parse_model(text: str) -> ModelFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError("json-syntax", exc.msg, exc.lineno, exc.colno) from None
    _require(isinstance(obj, dict), "schema", "model file must be a JSON object")
    version = obj.get("format")
    _require(version == FORMAT_VERSION, "schema", f"format must be {FORMAT_VERSION}, got {version!r}")
    known = {"format", "algebra", "graph", "open_graph", "morphism"}
    unknown = set(obj) - known
    _require(not unknown, "schema", f"unknown top-level keys: {sorted(unknown)}")
    _require(
        not ("graph" in obj and "open_graph" in obj),
        "schema",
        "a model holds either a graph or an open_graph, not both",
    )
    _require(
        any(k in obj for k in ("algebra", "graph", "open_graph")),
        "schema",
        "model has no algebra, graph, or open_graph section",
    )

    model = ModelFile()
    if "algebra" in obj:
        model.algebra = parse_algebra(obj["algebra"])
    if "graph" in obj:
        model.graph, model.vertex_ids, model.edge_ids = parse_graph(obj["graph"])
    if "open_graph" in obj:
        model.open_graph, model.vertex_ids, model.edge_ids = parse_open_graph(obj["open_graph"])
    if "morphism" in obj:
        morphism = obj["morphism"]
        _require(
            isinstance(morphism, dict)
            and isinstance(morphism.get("f0"), list)
            and isinstance(morphism.get("f1"), list)
            and all(isinstance(v, int) and not isinstance(v, bool) for v in morphism["f0"] + morphism["f1"]),
            "schema",
            "morphism must carry integer arrays f0 and f1",
        )
        g = model.any_graph
        if g is not None:
            _require(
                len(morphism["f0"]) == g.graph.n_vertices and len(morphism["f1"]) == g.graph.n_edges,
                "schema",
                "morphism arrays do not match the graph's vertex and edge counts",
            )
        model.morphism = (tuple(morphism["f0"]), tuple(morphism["f1"]))
    return model


def model_to_json(model: ModelFile) -> dict:
    obj: dict[str, Any] = {"format": model.format_version}
    if model.algebra is not None:
        obj["algebra"] = algebra_to_json(model.algebra)
    if model.graph is not None:
        obj["graph"] = graph_to_json(model.graph, model.vertex_ids or None, model.edge_ids or None)
    if model.open_graph is not None:
        obj["open_graph"] = open_graph_to_json(
            model.open_graph, model.vertex_ids or None, model.edge_ids or None
        )
    if model.morphism is not None:
        obj["morphism"] = {"f0": list(model.morphism[0]), "f1": list(model.morphism[1])}
    return obj


def emit_model(model: ModelFile) -> str:
    return json.dumps(model_to_json(model), indent=2, sort_keys=True) + "\n"


def load_model(path) -> ModelFile:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_model(handle.read())


def save_model(model: ModelFile, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(emit_model(model))


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: LabeledGraph, name: str = "model") -> str:
    """Graphviz text for a labeled graph; ordering follows the dense ids."""
    lines = [f"digraph {_dot_quote(name)} {{", "  rankdir=LR;"]
    for v, vertex_name in enumerate(g.graph.vertex_names):
        lines.append(f"  v{v} [label={_dot_quote(vertex_name)}];")
    for e in range(g.graph.n_edges):
        label = g.algebra.label_text(g.labels[e])
        lines.append(
            f"  v{g.graph.edge_src[e]} -> v{g.graph.edge_tgt[e]} [label={_dot_quote(label)}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
