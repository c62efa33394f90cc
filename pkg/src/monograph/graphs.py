"""Finite directed multigraphs with labeled edges, and label-preserving maps.

Vertices and edges are dense integer ids; display names are kept separately
so parallel edges and renamings never disturb identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .algebra import Flags, LabelAlgebra, MonoidHom, TableAlgebra, apply_hom
from .validation import AXIOM, STRUCTURE, ValidationReport


@dataclass(frozen=True)
class Graph:
    vertex_names: tuple[str, ...]
    edge_src: tuple[int, ...]
    edge_tgt: tuple[int, ...]

    def __post_init__(self):
        if len(self.edge_src) != len(self.edge_tgt):
            raise ValueError("edge source and target lists differ in length")
        n = len(self.vertex_names)
        for v in itertools.chain(self.edge_src, self.edge_tgt):
            if not isinstance(v, int) or not (0 <= v < n):
                raise ValueError(f"edge endpoint {v!r} is not a vertex id")

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_names)

    @property
    def n_edges(self) -> int:
        return len(self.edge_src)

    def out_edges(self, v: int) -> list[int]:
        return [e for e in range(self.n_edges) if self.edge_src[e] == v]

    def in_edges(self, v: int) -> list[int]:
        return [e for e in range(self.n_edges) if self.edge_tgt[e] == v]


def graph(vertices: Sequence[str], edges: Sequence[tuple[int, int]]) -> Graph:
    """Build a graph from vertex names and (src, tgt) id pairs."""
    src = tuple(e[0] for e in edges)
    tgt = tuple(e[1] for e in edges)
    return Graph(tuple(vertices), src, tgt)


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    algebra: LabelAlgebra
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != self.graph.n_edges:
            raise ValueError("labeling is not total on edges")
        for x in self.labels:
            if not self.algebra.contains(x):
                raise ValueError(f"label {x!r} is not an element of the algebra")

    def label_texts(self) -> tuple[str, ...]:
        return tuple(self.algebra.label_text(x) for x in self.labels)


def labeled_graph(
    vertices: Sequence[str],
    edges: Sequence[tuple[int, int]],
    algebra: LabelAlgebra,
    labels: Sequence,
) -> LabeledGraph:
    """Build a labeled graph; string labels are parsed through the algebra."""
    parsed = tuple(
        algebra.parse_label(x) if isinstance(x, str) or not algebra.contains(x) else x
        for x in labels
    )
    return LabeledGraph(graph(vertices, edges), algebra, parsed)


@dataclass(frozen=True)
class GraphMorphism:
    """A pair of maps (vertices, edges); `validate_morphism` checks the squares."""

    source: Graph
    target: Graph
    f0: tuple[int, ...]
    f1: tuple[int, ...]


def identity_morphism(g: Graph) -> GraphMorphism:
    return GraphMorphism(g, g, tuple(range(g.n_vertices)), tuple(range(g.n_edges)))


def compose_morphisms(outer: GraphMorphism, inner: GraphMorphism) -> GraphMorphism:
    if inner.target is not outer.source and inner.target != outer.source:
        raise ValueError("morphisms do not compose: target/source mismatch")
    return GraphMorphism(
        inner.source,
        outer.target,
        tuple(outer.f0[v] for v in inner.f0),
        tuple(outer.f1[e] for e in inner.f1),
    )


def validate_morphism(m: GraphMorphism) -> ValidationReport:
    """Report every edge whose source or target square fails to commute."""
    report = ValidationReport(subject="graph morphism")
    if len(m.f0) != m.source.n_vertices:
        report.add(STRUCTURE, "vertex-map-partial", "vertex map is not total")
    if len(m.f1) != m.source.n_edges:
        report.add(STRUCTURE, "edge-map-partial", "edge map is not total")
    if any(not (0 <= v < m.target.n_vertices) for v in m.f0):
        report.add(STRUCTURE, "dangling-vertex", "vertex map hits a missing vertex id")
    if any(not (0 <= e < m.target.n_edges) for e in m.f1):
        report.add(STRUCTURE, "dangling-edge", "edge map hits a missing edge id")
    if not report.ok:
        return report
    for e in range(m.source.n_edges):
        if m.target.edge_src[m.f1[e]] != m.f0[m.source.edge_src[e]]:
            report.add(AXIOM, "source-square", f"edge {e}: sources do not commute", (e,))
        if m.target.edge_tgt[m.f1[e]] != m.f0[m.source.edge_tgt[e]]:
            report.add(AXIOM, "target-square", f"edge {e}: targets do not commute", (e,))
    return report


def _require_valid(m: GraphMorphism) -> None:
    report = validate_morphism(m)
    if not report.ok:
        raise ValueError(report.summary())


def is_label_preserving(m: GraphMorphism, src: LabeledGraph, dst: LabeledGraph):
    """True iff every edge keeps its label along the map; witness edge otherwise."""
    if src.algebra != dst.algebra:
        raise ValueError("both graphs must share one label algebra")
    for e in range(m.source.n_edges):
        if dst.labels[m.f1[e]] != src.labels[e]:
            return False, e
    return True, None


def pullback_labeling(m: GraphMorphism, dst: LabeledGraph) -> LabeledGraph:
    """The unique labeling of the morphism's source that makes it label-preserving."""
    _require_valid(m)
    if m.target != dst.graph:
        raise ValueError("morphism target does not match the labeled graph")
    labels = tuple(dst.labels[m.f1[e]] for e in range(m.source.n_edges))
    return LabeledGraph(m.source, dst.algebra, labels)


def change_labels(hom: MonoidHom, g: LabeledGraph) -> LabeledGraph:
    """Relabel every edge through a homomorphism of label algebras."""
    if g.algebra != hom.source:
        raise ValueError("graph labels do not live in the hom's source algebra")
    return LabeledGraph(g.graph, hom.target, tuple(apply_hom(hom, x) for x in g.labels))


def grothendieck_morphism_check(
    phi: MonoidHom,
    m,
    src: LabeledGraph,
    dst: LabeledGraph,
    mode: str = "set",
) -> bool:
    """Check a combined (label map, graph map) morphism in one of three senses.

    set:      labels transport strictly along edges;
    additive: relabeled source pushes forward onto the target labeling;
    kleisli:  `m` maps edges to paths whose grade is the relabeled edge label.
    """
    if mode == "set":
        _require_valid(m)
        return all(
            dst.labels[m.f1[e]] == apply_hom(phi, src.labels[e])
            for e in range(m.source.n_edges)
        )
    if mode == "additive":
        from .additive import pushforward_labeling

        _require_valid(m)
        pushed = pushforward_labeling(m, change_labels(phi, src))
        return pushed.labels == dst.labels
    if mode == "kleisli":
        from .paths import kleisli_respects_hom

        return kleisli_respects_hom(phi, m)
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class Semiautomaton:
    """States acted on by inputs; `action[a][v]` is the next state."""

    state_names: tuple[str, ...]
    input_names: tuple[str, ...]
    action: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.state_names)
        if len(self.action) != len(self.input_names):
            raise ValueError("action is not total on inputs")
        for row in self.action:
            if len(row) != n or any(not (0 <= v < n) for v in row):
                raise ValueError("action is not total on states")


TRANSFORMATION_MONOID_LIMIT = 5000


def from_semiautomaton(sa: Semiautomaton, limit: int = TRANSFORMATION_MONOID_LIMIT) -> LabeledGraph:
    """The state graph of a semiautomaton, labeled in its transformation monoid.

    Vertices are states; each (input, state) pair contributes one edge from
    the state to its successor, labeled by the input's transformation.  The
    label algebra is the monoid generated by the inputs under composition
    (x * y applies y first), materialized as a finite table by closure
    enumeration.
    """
    n = len(sa.state_names)
    identity = tuple(range(n))
    generators = [tuple(row) for row in sa.action]

    elements = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        new_frontier = []
        for t in frontier:
            for g in generators:
                composed = tuple(t[g[v]] for v in range(n))  # t after g
                if composed not in index:
                    if len(elements) >= limit:
                        raise ValueError(f"transformation monoid exceeds {limit} elements")
                    index[composed] = len(elements)
                    elements.append(composed)
                    new_frontier.append(composed)
        frontier = new_frontier

    size = len(elements)
    table = []
    for x in elements:
        for y in elements:
            table.append(index[tuple(x[y[v]] for v in range(n))])
    algebra = TableAlgebra(
        tuple("[" + ",".join(map(str, t)) + "]" for t in elements),
        tuple(table),
        unit=0,
        flags=Flags(commutative=_table_commutative(table, size)),
    )

    edges = []
    labels = []
    for a, row in enumerate(sa.action):
        for v in range(n):
            edges.append((v, row[v]))
            labels.append(index[generators[a]])
    return LabeledGraph(graph(sa.state_names, edges), algebra, tuple(labels))


def _table_commutative(table: list[int], size: int) -> bool:
    return all(table[a * size + b] == table[b * size + a] for a in range(size) for b in range(a))


def undirected_components(g: Graph) -> list[list[int]]:
    """Partition vertices into blocks joined by undirected paths."""
    parent = list(range(g.n_vertices))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in range(g.n_edges):
        a, b = find(g.edge_src[e]), find(g.edge_tgt[e])
        if a != b:
            parent[max(a, b)] = min(a, b)

    blocks: dict[int, list[int]] = {}
    for v in range(g.n_vertices):
        blocks.setdefault(find(v), []).append(v)
    return [blocks[root] for root in sorted(blocks)]
