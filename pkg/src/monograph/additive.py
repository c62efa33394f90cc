"""Additive morphisms: maps that sum edge labels over fibers.

Only available over a commutative coefficient view; rig-labeled graphs
participate through the rig's addition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import GraphMorphism, LabeledGraph, validate_morphism


def _check_coefficient_algebra(src: LabeledGraph, dst: LabeledGraph) -> None:
    if src.algebra != dst.algebra:
        raise ValueError("both graphs must share one label algebra")
    algebra = src.algebra
    if not (algebra.is_rig or algebra.flags.commutative):
        raise ValueError("additive morphisms need a commutative label algebra")


@dataclass(frozen=True)
class AdditiveMorphism:
    underlying: GraphMorphism
    source: LabeledGraph
    target: LabeledGraph

    def __post_init__(self):
        _check_coefficient_algebra(self.source, self.target)
        if self.underlying.source != self.source.graph or self.underlying.target != self.target.graph:
            raise ValueError("morphism endpoints do not match the labeled graphs")


def is_additive_morphism(a: AdditiveMorphism):
    """True iff each target label is the sum of its fiber; witness edge otherwise.

    An edge with an empty fiber must carry the zero: a sum over nothing vanishes.
    """
    m = a.underlying
    report = validate_morphism(m)
    if not report.ok:
        raise ValueError(report.summary())
    algebra = a.source.algebra
    for e_prime in range(m.target.n_edges):
        total = algebra.zero
        for e in range(m.source.n_edges):
            if m.f1[e] == e_prime:
                total = algebra.add(total, a.source.labels[e])
        if total != a.target.labels[e_prime]:
            return False, e_prime
    return True, None


def pushforward_labeling(m: GraphMorphism, src: LabeledGraph) -> LabeledGraph:
    """The unique target labeling making `m` additive: fiberwise label sums."""
    report = validate_morphism(m)
    if not report.ok:
        raise ValueError(report.summary())
    if m.source != src.graph:
        raise ValueError("morphism source does not match the labeled graph")
    algebra = src.algebra
    if not (algebra.is_rig or algebra.flags.commutative):
        raise ValueError("pushforward needs a commutative label algebra")
    sums = [algebra.zero] * m.target.n_edges
    for e in range(m.source.n_edges):
        sums[m.f1[e]] = algebra.add(sums[m.f1[e]], src.labels[e])
    return LabeledGraph(m.target, algebra, tuple(sums))
