"""Open labeled graphs: graphs with input and output interfaces.

An open graph is a labeled graph plus two feet (bare finite sets, carrying
no edges) whose elements point at vertices through leg functions.  Feet are
matched by element name when composing.  Composition glues the shared foot
by a vertex quotient; tensoring lays graphs side by side.  The monoidal
laws only hold up to label-respecting isomorphism, which `iso_check`
decides for desk-sized graphs.

2-morphisms come in three modes (label-preserving, Kleisli, additive) and
compose vertically.  Horizontal composition of Kleisli-mode 2-morphisms is
not implemented: gluing two edge-to-path maps along a shared foot has no
settled recipe, and `compose_2morphisms` only offers the vertical direction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Union

from .graphs import Graph, GraphMorphism, LabeledGraph, validate_morphism, is_label_preserving
from .paths import KleisliMorphism, is_kleisli_morphism
from .validation import ValidationReport


@dataclass(frozen=True)
class OpenGraph:
    inner: LabeledGraph
    left_foot: tuple[str, ...]
    right_foot: tuple[str, ...]
    leg_in: tuple[int, ...]
    leg_out: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.left_foot)) != len(self.left_foot) or len(set(self.right_foot)) != len(self.right_foot):
            raise ValueError("foot element names must be distinct")
        if len(self.leg_in) != len(self.left_foot) or len(self.leg_out) != len(self.right_foot):
            raise ValueError("legs must be total on the feet")
        n = self.inner.graph.n_vertices
        for v in itertools.chain(self.leg_in, self.leg_out):
            if not (0 <= v < n):
                raise ValueError(f"leg target {v!r} is not a vertex id")


def identity_open(foot: tuple[str, ...], algebra) -> OpenGraph:
    """The edgeless open graph on a foot, both legs the identity."""
    inner = LabeledGraph(Graph(tuple(foot), (), ()), algebra, ())
    ids = tuple(range(len(foot)))
    return OpenGraph(inner, tuple(foot), tuple(foot), ids, ids)


def empty_open(algebra) -> OpenGraph:
    return identity_open((), algebra)


def _pushout(x: OpenGraph, y: OpenGraph):
    """Glue inner graphs along the shared foot.

    Returns (composite, map_x, map_y) where the maps send old vertex ids to
    composite ids.  Representatives are canonical (smallest combined id) and
    the result is renumbered densely, so output is reproducible.
    """
    if x.inner.algebra != y.inner.algebra:
        raise ValueError("open graphs must share one label algebra")
    if set(x.right_foot) != set(y.left_foot):
        raise ValueError(
            f"foot mismatch: {sorted(x.right_foot)} vs {sorted(y.left_foot)}"
        )
    nx = x.inner.graph.n_vertices
    ny = y.inner.graph.n_vertices
    parent = list(range(nx + ny))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for name, out_v in zip(x.right_foot, x.leg_out):
        in_v = y.leg_in[y.left_foot.index(name)]
        a, b = find(out_v), find(nx + in_v)
        if a != b:
            parent[max(a, b)] = min(a, b)

    reps = sorted({find(v) for v in range(nx + ny)})
    new_id = {rep: i for i, rep in enumerate(reps)}

    def combined_name(v: int) -> str:
        return x.inner.graph.vertex_names[v] if v < nx else y.inner.graph.vertex_names[v - nx]

    map_x = tuple(new_id[find(v)] for v in range(nx))
    map_y = tuple(new_id[find(nx + v)] for v in range(ny))
    names = tuple(combined_name(rep) for rep in reps)

    gx, gy = x.inner.graph, y.inner.graph
    src = tuple(map_x[v] for v in gx.edge_src) + tuple(map_y[v] for v in gy.edge_src)
    tgt = tuple(map_x[v] for v in gx.edge_tgt) + tuple(map_y[v] for v in gy.edge_tgt)
    labels = x.inner.labels + y.inner.labels
    composite = LabeledGraph(Graph(names, src, tgt), x.inner.algebra, labels)
    return composite, map_x, map_y


def compose(x: OpenGraph, y: OpenGraph) -> OpenGraph:
    """Glue `x`'s outputs to `y`'s inputs along their shared foot.

    Edge labels are untouched and edge counts add exactly; only vertices
    across the shared foot are ever identified.
    """
    composite, map_x, map_y = _pushout(x, y)
    return OpenGraph(
        composite,
        x.left_foot,
        y.right_foot,
        tuple(map_x[v] for v in x.leg_in),
        tuple(map_y[v] for v in y.leg_out),
    )


def _merge_foot_names(left: tuple[str, ...], right: tuple[str, ...]):
    """Disjoint union of foot names; right-side collisions get primed."""
    taken = set(left)
    merged = list(left)
    renamed = []
    for name in right:
        fresh = name
        while fresh in taken:
            fresh += "'"
        taken.add(fresh)
        merged.append(fresh)
        renamed.append(fresh)
    return tuple(merged), tuple(renamed)


def tensor(x: OpenGraph, y: OpenGraph) -> OpenGraph:
    """Set two open graphs side by side: disjoint union of everything."""
    if x.inner.algebra != y.inner.algebra:
        raise ValueError("open graphs must share one label algebra")
    gx, gy = x.inner.graph, y.inner.graph
    nx = gx.n_vertices
    names = gx.vertex_names + gy.vertex_names
    src = gx.edge_src + tuple(v + nx for v in gy.edge_src)
    tgt = gx.edge_tgt + tuple(v + nx for v in gy.edge_tgt)
    inner = LabeledGraph(Graph(names, src, tgt), x.inner.algebra, x.inner.labels + y.inner.labels)
    left, _ = _merge_foot_names(x.left_foot, y.left_foot)
    right, _ = _merge_foot_names(x.right_foot, y.right_foot)
    return OpenGraph(
        inner,
        left,
        right,
        x.leg_in + tuple(v + nx for v in y.leg_in),
        x.leg_out + tuple(v + nx for v in y.leg_out),
    )


@dataclass(frozen=True)
class OpenGraphMap:
    """A 2-morphism candidate: foot maps plus an inner map of the right mode."""

    source: OpenGraph
    target: OpenGraph
    foot_in: tuple[int, ...]
    foot_out: tuple[int, ...]
    inner: Union[GraphMorphism, KleisliMorphism]


def check_2morphism(m: OpenGraphMap, mode: str = "set"):
    """Foot squares must commute and the inner map must pass the mode's
    label condition (label-preserving, Kleisli, or additive).

    Returns ``(True, None)`` or ``(False, witness)`` where the witness names
    the failing foot element or edge.
    """
    inner = m.inner
    if mode == "kleisli":
        if not isinstance(inner, KleisliMorphism):
            raise ValueError("kleisli mode needs a Kleisli inner map")
        if inner.source != m.source.inner or inner.target != m.target.inner:
            raise ValueError("inner map endpoints do not match the open graphs")
        vmap = inner.vertex_map
    else:
        if not isinstance(inner, GraphMorphism):
            raise ValueError(f"{mode} mode needs a graph morphism inner map")
        if inner.source != m.source.inner.graph or inner.target != m.target.inner.graph:
            raise ValueError("inner map endpoints do not match the open graphs")
        vmap = inner.f0

    for a, image in enumerate(m.foot_in):
        if m.target.leg_in[image] != vmap[m.source.leg_in[a]]:
            return False, ("left-foot", a)
    for b, image in enumerate(m.foot_out):
        if m.target.leg_out[image] != vmap[m.source.leg_out[b]]:
            return False, ("right-foot", b)

    if mode == "set":
        if not validate_morphism(inner).ok:
            return False, ("inner", "invalid-morphism")
        ok, witness = is_label_preserving(inner, m.source.inner, m.target.inner)
        return (True, None) if ok else (False, ("edge", witness))
    if mode == "kleisli":
        ok, witness = is_kleisli_morphism(inner)
        return (True, None) if ok else (False, ("edge", witness))
    if mode == "additive":
        from .additive import AdditiveMorphism, is_additive_morphism

        if not validate_morphism(inner).ok:
            return False, ("inner", "invalid-morphism")
        ok, witness = is_additive_morphism(AdditiveMorphism(inner, m.source.inner, m.target.inner))
        return (True, None) if ok else (False, ("edge", witness))
    raise ValueError(f"unknown mode {mode!r}")


def compose_2morphisms(outer: OpenGraphMap, inner: OpenGraphMap, mode: str = "set") -> OpenGraphMap:
    """Vertical composite of two 2-morphisms of the same mode."""
    if inner.target != outer.source:
        raise ValueError("2-morphisms do not compose vertically")
    foot_in = tuple(outer.foot_in[a] for a in inner.foot_in)
    foot_out = tuple(outer.foot_out[b] for b in inner.foot_out)
    if mode == "kleisli":
        from .paths import compose_kleisli

        composite = compose_kleisli(outer.inner, inner.inner)
    else:
        from .graphs import compose_morphisms

        composite = compose_morphisms(outer.inner, inner.inner)
    return OpenGraphMap(inner.source, outer.target, foot_in, foot_out, composite)


ISO_VERTEX_LIMIT = 12


def _as_parts(g) -> tuple[Graph, Optional[tuple], Optional[object]]:
    if isinstance(g, LabeledGraph):
        return g.graph, g.labels, g.algebra
    return g, None, None


def iso_check(g1, g2, max_vertices: int = ISO_VERTEX_LIMIT):
    """Label-respecting isomorphism of (labeled) multigraphs by backtracking.

    Returns ``(True, (f0, f1))`` with an explicit vertex and edge bijection,
    or ``(False, None)``.  Guarded to small graphs; raise the limit at your
    own risk.
    """
    graph1, labels1, alg1 = _as_parts(g1)
    graph2, labels2, alg2 = _as_parts(g2)
    if (labels1 is None) != (labels2 is None):
        raise ValueError("cannot compare a labeled graph with a bare graph")
    if alg1 is not None and alg1 != alg2:
        return False, None
    if graph1.n_vertices != graph2.n_vertices or graph1.n_edges != graph2.n_edges:
        return False, None
    if graph1.n_vertices > max_vertices:
        raise ValueError(f"iso_check limited to {max_vertices} vertices")

    def edge_key(labels, e):
        return "" if labels is None else alg1.label_text(labels[e])

    def adjacency(g: Graph, labels):
        table: dict[tuple[int, int], list] = {}
        for e in range(g.n_edges):
            table.setdefault((g.edge_src[e], g.edge_tgt[e]), []).append(edge_key(labels, e))
        return {k: sorted(v) for k, v in table.items()}

    adj1 = adjacency(graph1, labels1)
    adj2 = adjacency(graph2, labels2)

    def signature(g: Graph, labels, v: int):
        outs = sorted(edge_key(labels, e) for e in range(g.n_edges) if g.edge_src[e] == v)
        ins = sorted(edge_key(labels, e) for e in range(g.n_edges) if g.edge_tgt[e] == v)
        return tuple(outs), tuple(ins)

    sig1 = [signature(graph1, labels1, v) for v in range(graph1.n_vertices)]
    sig2 = [signature(graph2, labels2, v) for v in range(graph2.n_vertices)]
    if sorted(sig1) != sorted(sig2):
        return False, None

    n = graph1.n_vertices
    assignment: list[Optional[int]] = [None] * n
    used = [False] * n

    def consistent(v: int, w: int) -> bool:
        for u in range(v + 1):
            img = assignment[u] if u < v else w
            for (a, b), (fa, fb) in (((v, u), (w, img)), ((u, v), (img, w))):
                if adj1.get((a, b), []) != adj2.get((fa, fb), []):
                    return False
        return True

    def backtrack(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if not used[w] and sig1[v] == sig2[w] and consistent(v, w):
                assignment[v] = w
                used[w] = True
                if backtrack(v + 1):
                    return True
                assignment[v] = None
                used[w] = False
        return False

    if not backtrack(0):
        return False, None

    f0 = tuple(assignment)  # type: ignore[arg-type]
    # pair up parallel edges between matched endpoints by label, then id
    by_pair1: dict[tuple[int, int], list[int]] = {}
    by_pair2: dict[tuple[int, int], list[int]] = {}
    for e in range(graph1.n_edges):
        by_pair1.setdefault((graph1.edge_src[e], graph1.edge_tgt[e]), []).append(e)
        by_pair2.setdefault((graph2.edge_src[e], graph2.edge_tgt[e]), []).append(e)
    f1 = [0] * graph1.n_edges
    for (a, b), edges1 in by_pair1.items():
        edges2 = by_pair2[(f0[a], f0[b])]
        for e1, e2 in zip(
            sorted(edges1, key=lambda e: (edge_key(labels1, e), e)),
            sorted(edges2, key=lambda e: (edge_key(labels2, e), e)),
        ):
            f1[e1] = e2
    return True, (f0, tuple(f1))
