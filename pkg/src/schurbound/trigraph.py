"""Graphs of pair sets, triangle counts, and the extremal triangle problem.

A graph with ``C(r,2) + t`` edges (``0 <= t < r``) has at most
``C(r,3) + C(t,2)`` triangles; ``extremal_graph`` builds a graph attaining that
and ``brute_force_max_triangles`` checks it by exhaustive enumeration.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb, isqrt
from typing import Iterable, Sequence

from .errors import EnumerationTooLarge, InfeasibleDimensions

DEFAULT_WORK_CAP = 5_000_000


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices ``1..v``."""

    v: int
    edges: frozenset

    def __post_init__(self):
        clean = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            a, b = min(a, b), max(a, b)
            if not (1 <= a and b <= self.v):
                raise ValueError(f"edge ({a}, {b}) outside 1..{self.v}")
            clean.add((a, b))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, v: int, edges: Iterable[Sequence[int]]) -> SimpleGraph:
        edges = [tuple(e) for e in edges]
        if len(set(tuple(sorted(e)) for e in edges)) != len(edges):
            raise ValueError("duplicate edge")
        return cls(v, frozenset(edges))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges, key=lambda e: (e[1], e[0]))

    def adjacency(self) -> list[int]:
        """Bitmask neighbourhoods, index 0 unused."""
        adj = [0] * (self.v + 1)
        for a, b in self.edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return adj


def graph_of_pairset(pairs: Iterable[Sequence[int]], n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, pairs)


def complement(G: SimpleGraph) -> SimpleGraph:
    return SimpleGraph(G.v, frozenset(e for e in combinations(range(1, G.v + 1), 2) if e not in G.edges))


def count_triangles(G: SimpleGraph) -> int:
    adj = G.adjacency()
    total = 0
    for a, b in G.edges:
        total += bin(adj[a] & adj[b]).count("1")
    return total // 3


@dataclass(frozen=True)
class RTDecomposition:
    value: int
    r: int
    t: int


def rt_decompose(value: int) -> RTDecomposition:
    """Write ``value = C(r,2) + t`` with ``0 <= t < r``."""
    if value < 0:
        raise ValueError("value must be non-negative")
    r = (1 + isqrt(1 + 8 * value)) // 2
    while comb(r, 2) > value:
        r -= 1
    while comb(r + 1, 2) <= value:
        r += 1
    r = max(r, 1)
    return RTDecomposition(value, r, value - comb(r, 2))


def max_triangles_formula(edge_count: int) -> int:
    d = rt_decompose(edge_count)
    return comb(d.r, 3) + comb(d.t, 2)


def extremal_graph(edge_count: int, connected: bool = True) -> SimpleGraph:
    """``K_r`` plus one vertex joined to ``t`` of its vertices.

    With ``connected=False`` and ``t == 1`` the extra edge is a separate
    ``K_2`` instead (the disconnected extremal graph).
    """
    d = rt_decompose(edge_count)
    r, t = d.r, d.t
    edges = list(combinations(range(1, r + 1), 2))
    if t == 1 and not connected:
        return SimpleGraph.from_edges(r + 2, edges + [(r + 1, r + 2)])
    edges += [(i, r + 1) for i in range(1, t + 1)]
    return SimpleGraph.from_edges(r + (1 if t else 0), edges)


def _search(edges, adj, start, remaining, tri, best):
    if remaining == 0:
        return max(best, tri)
    stop = len(edges) - remaining + 1
    for idx in range(start, stop):
        a, b = edges[idx]
        gain = bin(adj[a] & adj[b]).count("1")
        adj[a] |= 1 << b
        adj[b] |= 1 << a
        best = _search(edges, adj, idx + 1, remaining - 1, tri + gain, best)
        adj[a] &= ~(1 << b)
        adj[b] &= ~(1 << a)
    return best


def _search_from(args):
    edges, first, edge_count, v = args
    adj = [0] * v
    a, b = edges[first]
    adj[a] |= 1 << b
    adj[b] |= 1 << a
    return _search(edges, adj, first + 1, edge_count - 1, 0, 0)


def brute_force_max_triangles(
    edge_count: int,
    max_vertices: int,
    work_cap: int = DEFAULT_WORK_CAP,
    workers: int = 1,
) -> int:
    """Maximum triangle count over every labelled graph with ``edge_count`` edges
    on ``max_vertices`` vertices (smaller graphs embed with isolated vertices).

    The enumeration is split by the first chosen edge; the maximum does not
    depend on how the parts are scheduled.
    """
    edges = list(combinations(range(max_vertices), 2))
    if edge_count > len(edges) or edge_count < 0:
        raise InfeasibleDimensions(f"{edge_count} edges do not fit on {max_vertices} vertices")
    work = comb(len(edges), edge_count)
    if work > work_cap:
        raise EnumerationTooLarge(f"{work} edge subsets exceed the work cap {work_cap}")
    if edge_count == 0:
        return 0
    jobs = [(edges, first, edge_count, max_vertices) for first in range(len(edges) - edge_count + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return max(pool.map(_search_from, jobs))
    return max(map(_search_from, jobs))
