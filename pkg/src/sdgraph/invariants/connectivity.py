"""Vertex and edge connectivity by unit-capacity max flow (Menger)."""

from __future__ import annotations

from collections import deque

from ..graphs import SimpleGraph


class _FlowNetwork:
    def __init__(self, size: int):
        self.cap: list[dict[int, int]] = [dict() for _ in range(size)]

    def add(self, u: int, v: int, c: int) -> None:
        self.cap[u][v] = self.cap[u].get(v, 0) + c
        self.cap[v].setdefault(u, 0)

    def max_flow(self, s: int, t: int, limit: int) -> int:
        """Augment along BFS paths until ``limit`` units or no path remain."""
        cap = self.cap
        flow = 0
        while flow < limit:
            prev = {s: s}
            q = deque([s])
            while q and t not in prev:
                u = q.popleft()
                for v, c in cap[u].items():
                    if c > 0 and v not in prev:
                        prev[v] = u
                        q.append(v)
            if t not in prev:
                break
            v = t
            while v != s:
                u = prev[v]
                cap[u][v] -= 1
                cap[v][u] += 1
                v = u
            flow += 1
        return flow


def local_vertex_connectivity(graph: SimpleGraph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent)."""
    n = graph.vertex_count
    big = n + 1
    net = _FlowNetwork(2 * n)
    for v in range(n):
        net.add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for u in graph.neighbors(v):
            net.add(2 * v + 1, 2 * u, big)
    return net.max_flow(2 * s + 1, 2 * t, n if limit is None else limit)


def local_edge_connectivity(graph: SimpleGraph, s: int, t: int, limit: int | None = None) -> int:
    n = graph.vertex_count
    net = _FlowNetwork(n)
    for u, v in graph.edges():
        net.add(u, v, 1)
        net.add(v, u, 1)
    return net.max_flow(s, t, n if limit is None else limit)


def vertex_connectivity(graph: SimpleGraph) -> int:
    """κ: min over non-adjacent pairs of local connectivity; |V|-1 for complete graphs."""
    n = graph.vertex_count
    if n <= 1:
        return 0
    if not graph.is_connected:
        return 0
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if graph.adjacent(s, t):
                continue
            best = min(best, local_vertex_connectivity(graph, s, t, best))
            if best == 0:
                return 0
    return best


def edge_connectivity(graph: SimpleGraph) -> int:
    """κ′: min over v of the max flow from a fixed root to v."""
    n = graph.vertex_count
    if n <= 1:
        return 0
    if not graph.is_connected:
        return 0
    best = min(graph.degrees)
    for t in range(1, n):
        best = min(best, local_edge_connectivity(graph, 0, t, best))
    return best


def min_degree(graph: SimpleGraph) -> int:
    return min(graph.degrees) if graph.vertex_count else 0
