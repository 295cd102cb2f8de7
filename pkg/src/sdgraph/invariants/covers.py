"""Vertex and edge covers: Gallai identities plus direct exact searches."""

from __future__ import annotations

from functools import lru_cache

from ..budget import Budget
from ..graphs import SimpleGraph, bits, popcount

DIRECT_CHECK_LIMIT = 20


def min_vertex_cover_direct(graph: SimpleGraph, budget: Budget | None = None) -> int:
    """Exact β by branching on an uncovered edge (take one end or the other)."""
    adj = graph.adjacency
    best = [graph.vertex_count]

    def solve(removed: int, size: int) -> None:
        if budget is not None:
            budget.tick()
        if size >= best[0]:
            return
        # first remaining edge
        for u in range(graph.vertex_count):
            if removed >> u & 1:
                continue
            if adj[u] & ~removed:
                break
        else:
            best[0] = size
            return
        rest_u = adj[u] & ~removed
        # taking u; otherwise all of N(u) must be in the cover
        solve(removed | (1 << u), size + 1)
        solve(removed | rest_u | (1 << u), size + popcount(rest_u))

    solve(0, 0)
    return best[0]


def min_edge_cover_direct(graph: SimpleGraph) -> int | None:
    """Exact β′ by memoised search over covered sets; ``None`` with isolated vertices."""
    n = graph.vertex_count
    if any(d == 0 for d in graph.degrees):
        return None
    adj = graph.adjacency
    full = graph.full_mask

    @lru_cache(maxsize=None)
    def f(covered: int) -> int:
        if covered == full:
            return 0
        free = full & ~covered
        v = (free & -free).bit_length() - 1
        return 1 + min(f(covered | (1 << v) | (1 << u)) for u in bits(adj[v]))

    return f(0)


def covers(graph: SimpleGraph, alpha: int, alpha_prime: int) -> tuple[int, int | None]:
    """(β, β′) from Gallai's identities, cross-checked directly on small graphs."""
    n = graph.vertex_count
    beta = n - alpha
    isolated = any(d == 0 for d in graph.degrees)
    beta_prime = None if isolated else n - alpha_prime
    if n <= DIRECT_CHECK_LIMIT:
        if min_vertex_cover_direct(graph) != beta:
            raise AssertionError("vertex cover search disagrees with α + β = |V|")
        if not isolated and n <= 16 and min_edge_cover_direct(graph) != beta_prime:
            raise AssertionError("edge cover search disagrees with α′ + β′ = |V|")
    return beta, beta_prime
