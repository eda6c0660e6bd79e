"""General-graph maximum-weight matching.

Public surface: :class:`WeightedGraph`, :class:`Matching`,
:func:`max_weight_matching` and :func:`max_cardinality_max_weight_matching`.

Two interchangeable kernels implement the blossom algorithm: a compiled
Cython extension (preferred) and a pure-Python fallback.  Selection happens
at import time; set SWISSFAIR_DISABLE_EXTENSION=1 to force the fallback.
``BACKEND`` records which one is active.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import _blossom as _blossom_py

if os.environ.get("SWISSFAIR_DISABLE_EXTENSION") == "1":
    _kernel = _blossom_py
    BACKEND = "python"
else:
    try:
        from . import _blossom_cy as _kernel  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _kernel = _blossom_py
        BACKEND = "python"

__all__ = [
    "BACKEND",
    "Matching",
    "WeightedGraph",
    "max_cardinality_max_weight_matching",
    "max_weight_matching",
]


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with non-negative integer edge weights.

    Edges are (u, v, weight) triples with 0 <= u, v < node_count, u != v,
    and no repeated unordered pair.  Construction validates and normalises:
    each stored edge has u < v and the edge list is sorted, so two graphs
    with the same edge *set* compare equal and produce identical matchings.
    """

    node_count: int
    edges: tuple[tuple[int, int, int], ...]

    def __init__(self, node_count: int, edges):
        if node_count < 0:
            raise ValueError("node_count must be non-negative")
        seen = set()
        normalised = []
        for u, v, w in edges:
            if not (isinstance(u, int) and isinstance(v, int) and isinstance(w, int)):
                raise ValueError(f"edge ({u}, {v}, {w}) must be all-integer")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError(f"edge ({u}, {v}) outside 0..{node_count - 1}")
            if w < 0:
                raise ValueError(f"negative weight {w} on edge ({u}, {v})")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            normalised.append((u, v, w))
        normalised.sort()
        object.__setattr__(self, "node_count", node_count)
        object.__setattr__(self, "edges", tuple(normalised))


@dataclass(frozen=True)
class Matching:
    """A matching: node-disjoint edge set plus its total weight."""

    pairs: frozenset[tuple[int, int]]
    total_weight: int

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)


def _solve(node_count: int, us, vs, ws) -> list[int]:
    """Run the active kernel on raw edge arrays.  Internal."""
    return _kernel.solve(node_count, us, vs, ws)


def _to_matching(graph: WeightedGraph, mate: list[int]) -> Matching:
    weight_of = {(u, v): w for u, v, w in graph.edges}
    pairs = set()
    total = 0
    for v, partner in enumerate(mate):
        if partner > v:
            pairs.add((v, partner))
            total += weight_of[(v, partner)]
    return Matching(pairs=frozenset(pairs), total_weight=total)


def max_weight_matching(graph: WeightedGraph) -> Matching:
    """Matching of maximum total weight (any cardinality).

    Deterministic: the canonical edge order fixed by WeightedGraph makes
    the result a function of the edge set alone.
    """
    if not graph.edges:
        return Matching(pairs=frozenset(), total_weight=0)
    us = [e[0] for e in graph.edges]
    vs = [e[1] for e in graph.edges]
    ws = [e[2] for e in graph.edges]
    mate = _solve(graph.node_count, us, vs, ws)
    return _to_matching(graph, mate)


def max_cardinality_max_weight_matching(graph: WeightedGraph) -> Matching:
    """Maximum-weight matching among the maximum-cardinality matchings.

    Adds a uniform base weight B > (node_count / 2) * max(weight) to every
    edge: any matching then beats all smaller matchings regardless of
    original weights, so the plain maximum-weight solution on the inflated
    graph has maximum cardinality, and among those, maximum original weight.
    """
    if not graph.edges:
        return Matching(pairs=frozenset(), total_weight=0)
    max_w = max(e[2] for e in graph.edges)
    boost = (graph.node_count // 2) * max_w + 1
    us = [e[0] for e in graph.edges]
    vs = [e[1] for e in graph.edges]
    ws = [e[2] + boost for e in graph.edges]
    mate = _solve(graph.node_count, us, vs, ws)
    return _to_matching(graph, mate)
