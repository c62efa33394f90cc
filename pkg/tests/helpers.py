"""Shared builders and independent oracles for the test suite."""

from __future__ import annotations

import random
from pathlib import Path

import monograph as mg

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

SIGN = mg.CATALOG["SIGN"]
SIGN0 = mg.CATALOG["SIGN0"]
SIGNI = mg.CATALOG["SIGNI"]
BOOL = mg.CATALOG["BOOL"]
S_RIG = mg.CATALOG["S"]
NAT = mg.named_algebra("NatAdd")
TRIVIAL = mg.named_algebra("TrivialOne")


def g2() -> mg.Graph:
    return mg.graph(["u", "v"], [(0, 1), (1, 0)])


def p2() -> mg.Graph:
    return mg.graph(["u", "v"], [(0, 1), (0, 1)])


def q4() -> mg.Graph:
    return mg.graph(["u", "v"], [(0, 1), (0, 1), (1, 0), (1, 0)])


def r5() -> mg.Graph:
    return mg.graph(["u", "v"], [(0, 1), (0, 1), (1, 0), (1, 0), (1, 0)])


def homework() -> mg.LabeledGraph:
    return mg.load_model(FIXTURES / "homework.json").graph


def host() -> mg.LabeledGraph:
    return mg.load_model(FIXTURES / "host.json").graph


def rand_graph(rng: random.Random, max_vertices: int = 6, max_edges: int = 8) -> mg.Graph:
    n = rng.randint(1, max_vertices)
    m = rng.randint(0, max_edges)
    edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]
    return mg.graph([f"v{i}" for i in range(n)], edges)


def rand_labels(rng: random.Random, g: mg.Graph, algebra) -> mg.LabeledGraph:
    if isinstance(algebra, mg.TableAlgebra):
        labels = tuple(rng.randrange(algebra.size) for _ in range(g.n_edges))
    else:
        labels = tuple(algebra.sample(rng) for _ in range(g.n_edges))
    return mg.LabeledGraph(g, algebra, labels)


def rand_labeled(rng: random.Random, algebra, max_vertices: int = 6, max_edges: int = 8) -> mg.LabeledGraph:
    return rand_labels(rng, rand_graph(rng, max_vertices, max_edges), algebra)


def rand_open(
    rng: random.Random,
    algebra,
    left_foot: tuple[str, ...],
    right_foot: tuple[str, ...],
    max_vertices: int = 4,
    max_edges: int = 5,
    injective_legs: bool = False,
) -> mg.OpenGraph:
    lower = max(1, len(left_foot), len(right_foot)) if injective_legs else 1
    n = rng.randint(lower, max(lower, max_vertices))
    inner = rand_labels(rng, mg.graph([f"v{i}" for i in range(n)], [
        (rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, max_edges))
    ]), algebra)
    if injective_legs:
        leg_in = tuple(rng.sample(range(n), len(left_foot)))
        leg_out = tuple(rng.sample(range(n), len(right_foot)))
    else:
        leg_in = tuple(rng.randrange(n) for _ in left_foot)
        leg_out = tuple(rng.randrange(n) for _ in right_foot)
    return mg.OpenGraph(inner, left_foot, right_foot, leg_in, leg_out)


def rand_composable_triple(rng: random.Random, algebra, max_vertices: int = 4, max_edges: int = 5):
    feet = tuple(f"p{i}" for i in range(rng.randint(0, 3)))
    feet2 = tuple(f"q{i}" for i in range(rng.randint(0, 3)))
    a = tuple(f"a{i}" for i in range(rng.randint(0, 2)))
    d = tuple(f"d{i}" for i in range(rng.randint(0, 2)))
    x = rand_open(rng, algebra, a, feet, max_vertices, max_edges)
    y = rand_open(rng, algebra, feet, feet2, max_vertices, max_edges)
    z = rand_open(rng, algebra, feet2, d, max_vertices, max_edges)
    return x, y, z


def rand_glue_pair(rng: random.Random, algebra, max_vertices: int = 4, max_edges: int = 4):
    """Two open graphs sharing an interface, with injective legs."""
    shared = tuple(f"s{i}" for i in range(rng.randint(1, 3)))
    x = rand_open(rng, algebra, (), shared, max_vertices, max_edges, injective_legs=True)
    y = rand_open(rng, algebra, shared, (), max_vertices, max_edges, injective_legs=True)
    return x, y


def bfs_components(g: mg.Graph) -> list[list[int]]:
    """Independent undirected-components oracle."""
    neighbors: dict[int, set[int]] = {v: set() for v in range(g.n_vertices)}
    for e in range(g.n_edges):
        neighbors[g.edge_src[e]].add(g.edge_tgt[e])
        neighbors[g.edge_tgt[e]].add(g.edge_src[e])
    seen: set[int] = set()
    blocks = []
    for start in range(g.n_vertices):
        if start in seen:
            continue
        block = []
        frontier = [start]
        seen.add(start)
        while frontier:
            v = frontier.pop()
            block.append(v)
            for w in neighbors[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        blocks.append(sorted(block))
    return blocks


def oracle_paths(g: mg.Graph, start: int, end: int, max_len: int) -> list[tuple[int, ...]]:
    """Breadth-first path enumeration, independent of the search module."""
    found = []
    frontier = [(start, ())]
    for _ in range(max_len + 1):
        next_frontier = []
        for at, edges in frontier:
            if at == end:
                found.append(edges)
            for e in range(g.n_edges):
                if g.edge_src[e] == at:
                    next_frontier.append((g.edge_tgt[e], edges + (e,)))
        frontier = next_frontier
    return found


def oracle_motif_occurrences(motif: mg.LabeledGraph, host_graph: mg.LabeledGraph, max_len: int):
    """Exhaustive motif oracle: every vertex map, every bounded path tuple,
    filtered by the definition (endpoints and label product) computed inline."""
    import itertools

    algebra = host_graph.algebra
    mg_graph = motif.graph
    hits = set()
    for assignment in itertools.product(range(host_graph.graph.n_vertices), repeat=mg_graph.n_vertices):
        per_edge = []
        for e in range(mg_graph.n_edges):
            u = assignment[mg_graph.edge_src[e]]
            v = assignment[mg_graph.edge_tgt[e]]
            good = []
            for edges in oracle_paths(host_graph.graph, u, v, max_len):
                product = algebra.one
                for edge in edges:
                    product = algebra.mul(host_graph.labels[edge], product)
                if product == motif.labels[e]:
                    good.append(edges)
            per_edge.append(good)
        for combo in itertools.product(*per_edge):
            hits.add((assignment, combo))
    return hits
