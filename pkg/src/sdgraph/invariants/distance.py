"""Shortest-path distances and the distance-defined vertex sets."""

from __future__ import annotations

from dataclasses import dataclass

from ..graphs import SimpleGraph, bits, popcount


def bfs_distances(graph: SimpleGraph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * graph.vertex_count
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    adj = graph.adjacency
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def all_pairs_distances(graph: SimpleGraph) -> tuple[tuple[int | None, ...], ...]:
    return tuple(tuple(bfs_distances(graph, v)) for v in range(graph.vertex_count))


@dataclass(frozen=True)
class DistanceProfile:
    dist: tuple[tuple[int | None, ...], ...]
    ecc: tuple[int, ...]
    radius: int
    diameter: int
    connected: bool
    eccentric_vertex_set: frozenset[int]
    boundary_set: frozenset[int]
    interior_set: frozenset[int]
    complete_vertex_set: frozenset[int]
    center_set: frozenset[int]

    @property
    def is_eccentric_graph(self) -> bool:
        return len(self.eccentric_vertex_set) == len(self.ecc)


def _is_boundary_of(dist, graph: SimpleGraph, u: int, v: int) -> bool:
    duv = dist[u][v]
    if v == u or duv is None:
        return False
    return all(dist[u][w] <= duv for w in bits(graph.adjacency[v]))


def _is_interior(dist, n: int, v: int) -> bool:
    for u in range(n):
        if u == v or dist[u][v] is None:
            continue
        duv = dist[u][v]
        if not any(
            w != v and dist[v][w] is not None and dist[u][w] == duv + dist[v][w]
            for w in range(n)
        ):
            return False
    return True


def distance_profile(graph: SimpleGraph) -> DistanceProfile:
    """Distances by BFS; eccentricities are taken within each component."""
    n = graph.vertex_count
    dist = all_pairs_distances(graph)
    ecc = tuple(max((d for d in row if d is not None), default=0) for row in dist)
    radius = min(ecc, default=0)
    diameter = max(ecc, default=0)
    eccentric = frozenset(
        v for v in range(n) if any(u != v and dist[u][v] == ecc[u] for u in range(n))
    )
    boundary = frozenset(
        v for v in range(n) if any(_is_boundary_of(dist, graph, u, v) for u in range(n))
    )
    interior = frozenset(v for v in range(n) if _is_interior(dist, n, v))
    complete = frozenset(
        v for v in range(n)
        if all(popcount(graph.adjacency[u] & graph.adjacency[v]) == graph.degrees[v] - 1
               for u in bits(graph.adjacency[v]))
    )
    center = frozenset(v for v in range(n) if ecc[v] == radius)
    return DistanceProfile(
        dist=dist,
        ecc=ecc,
        radius=radius,
        diameter=diameter,
        connected=graph.is_connected,
        eccentric_vertex_set=eccentric,
        boundary_set=boundary,
        interior_set=interior,
        complete_vertex_set=complete,
        center_set=center,
    )
