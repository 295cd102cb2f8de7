"""Maximum (weighted) cliques by branch and bound on bitsets."""

from __future__ import annotations

from ..budget import Budget
from ..graphs import SimpleGraph, bits, popcount, twin_partition


def _color_bound(adj, weights, p: int) -> list[tuple[int, int]]:
    """Greedy colouring of ``p``; returns (vertex, bound) in increasing bound order.

    The bound of a vertex is the sum over colour classes up to its own of
    the heaviest weight in each class.
    """
    out = []
    acc = 0
    uncolored = p
    while uncolored:
        q = uncolored
        heaviest = 0
        klass = []
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~adj[v] & ~(1 << v)
            klass.append(v)
            heaviest = max(heaviest, weights[v])
        uncolored &= ~sum(1 << v for v in klass)
        acc += heaviest
        out.extend((v, acc) for v in klass)
    return out


def max_weight_clique(adj: tuple[int, ...], weights: list[int], candidates: int,
                      budget: Budget | None = None) -> tuple[int, int]:
    """(best weight, clique mask) inside ``candidates``."""
    best = [0, 0]

    def expand(r_mask: int, r_w: int, p: int) -> None:
        if budget is not None:
            budget.tick((best[0], None))
        if not p:
            if r_w > best[0]:
                best[0], best[1] = r_w, r_mask
            return
        order = _color_bound(adj, weights, p)
        for v, bound in reversed(order):
            if r_w + bound <= best[0]:
                return
            expand(r_mask | (1 << v), r_w + weights[v], p & adj[v])
            p &= ~(1 << v)
        if r_w > best[0]:
            best[0], best[1] = r_w, r_mask

    expand(0, 0, candidates)
    return best[0], best[1]


def _reduced(graph: SimpleGraph):
    """Twin-collapsed clique instance: (adj of reps, weights, reps, classes)."""
    tp = twin_partition(graph)
    reps = [c[0] for c in tp.classes]
    q = graph.induced(reps)
    # closed twins can all join a clique together, open twins at most one
    weights = [len(c) if kind == "closed" else 1 for c, kind in zip(tp.classes, tp.kinds)]
    return q.adjacency, weights, reps, tp


def clique_number(graph: SimpleGraph, budget: Budget | float | None = None) -> int:
    if graph.vertex_count == 0:
        return 0
    b = None if budget is None else Budget.coerce(budget, "clique number")
    adj, weights, _, _ = _reduced(graph)
    w, _ = max_weight_clique(adj, weights, (1 << len(adj)) - 1, b)
    return w


def independence_number(graph: SimpleGraph, budget: Budget | float | None = None) -> int:
    return clique_number(graph.complement(), budget)


def maximum_clique(graph: SimpleGraph, budget: Budget | float | None = None) -> tuple[int, ...]:
    """Lexicographically least maximum clique (by sorted vertex tuple)."""
    b = None if budget is None else Budget.coerce(budget, "maximum clique")
    n = graph.vertex_count
    if n == 0:
        return ()
    omega = clique_number(graph, b)
    adj = graph.adjacency
    ones = [1] * n
    chosen: list[int] = []
    cand = graph.full_mask
    for v in range(n):
        if not cand >> v & 1:
            continue
        rest = cand & adj[v]
        w, _ = max_weight_clique(adj, ones, rest, b)
        if len(chosen) + 1 + w == omega:
            chosen.append(v)
            cand = rest
            if len(chosen) == omega:
                break
        cand &= ~(1 << v)
    return tuple(chosen)


def maximum_independent_set(graph: SimpleGraph, budget: Budget | float | None = None) -> tuple[int, ...]:
    return maximum_clique(graph.complement(), budget)


def is_clique(graph: SimpleGraph, vertices) -> bool:
    vs = list(vertices)
    return all(graph.adjacent(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def clique_number_plain(graph: SimpleGraph) -> int:
    """Unreduced search, kept as a cross-check for the twin collapsing."""
    if graph.vertex_count == 0:
        return 0
    w, m = max_weight_clique(graph.adjacency, [1] * graph.vertex_count, graph.full_mask)
    assert popcount(m) == w and is_clique(graph, bits(m))
    return w
