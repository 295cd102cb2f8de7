"""Resolving sets: metric dimension, resolving polynomial, strong metric dimension."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from ..budget import Budget, BudgetExceeded
from ..graphs import SimpleGraph, bits, quotient_by_closed_twins, twin_partition
from ..linalg import BigPolynomial
from .cliques import clique_number
from .covers import min_vertex_cover_direct
from .distance import all_pairs_distances

ENUMERATION_LIMIT = 16
DEFINITION_ROUTE_LIMIT = 20


class PreconditionError(ValueError):
    pass


def resolver_masks(dist) -> dict[tuple[int, int], int]:
    """S_uv = {z : d(z,u) != d(z,v)} as bitmasks, for u < v."""
    n = len(dist)
    out = {}
    for u in range(n):
        du = dist[u]
        for v in range(u + 1, n):
            dv = dist[v]
            m = 0
            for z in range(n):
                if du[z] != dv[z]:
                    m |= 1 << z
            out[u, v] = m
    return out


def is_resolving(dist, vertices) -> bool:
    """Brute definition: distance vectors to ``vertices`` are pairwise distinct."""
    ws = list(vertices)
    vecs = {tuple(dist[w][v] for w in ws) for v in range(len(dist))}
    return len(vecs) == len(dist)


def _require_connected(graph: SimpleGraph) -> None:
    if not graph.is_connected:
        raise PreconditionError("graph must be connected")


def metric_dimension(graph: SimpleGraph, budget: Budget | float | None = 120.0) -> tuple[int, tuple[int, ...]]:
    """(dim, lexicographically least minimum resolving set).

    Every resolving set keeps all but at most one vertex of each twin class,
    so only complements picking at most one vertex per class are searched.
    """
    _require_connected(graph)
    budget = Budget.coerce(budget, "metric dimension")
    n = graph.vertex_count
    if n <= 1:
        return 0, ()
    dist = all_pairs_distances(graph)
    S = resolver_masks(dist)
    classes = twin_partition(graph).classes
    lower = sum(len(c) - 1 for c in classes)
    for size in range(max(lower, 1), n + 1):
        missing = n - size
        best = None
        for chosen in combinations(range(len(classes)), missing):
            for out in product(*(classes[k] for k in chosen)):
                budget.tick((size, n - 1))
                if all(S[min(u, v), max(u, v)] & ~_mask(out) for u, v in combinations(out, 2)):
                    outset = set(out)
                    cand = tuple(v for v in range(n) if v not in outset)
                    if best is None or cand < best:
                        best = cand
        if best is not None:
            return size, best
    raise AssertionError("V(Γ) always resolves")


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class ResolvingCensus:
    dim: int
    counts: dict[int, int]  # r_i for i = dim..|V|
    method: str
    polynomial: BigPolynomial = field(init=False)

    def __post_init__(self):
        top = max(self.counts, default=0)
        coeffs = [0] * (top + 1)
        for i, r in self.counts.items():
            coeffs[i] = r
        object.__setattr__(self, "polynomial", BigPolynomial(tuple(coeffs)))

    def r(self, i: int) -> int:
        return self.counts.get(i, 0)


def _census_from_counts(n: int, counts: list[int], method: str) -> ResolvingCensus:
    dim = next(i for i, c in enumerate(counts) if c)
    return ResolvingCensus(dim, {i: counts[i] for i in range(dim, n + 1)}, method)


def census_by_enumeration(graph: SimpleGraph, budget: Budget | float | None = None) -> ResolvingCensus:
    """Test all 2^|V| subsets against every resolver mask (vectorised)."""
    n = graph.vertex_count
    if n > ENUMERATION_LIMIT + 6:
        raise PreconditionError("subset enumeration is limited to small graphs")
    budget = Budget.coerce(budget, "resolving census (enumeration)")
    dist = all_pairs_distances(graph)
    subsets = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(1 << n, dtype=bool)
    for s in resolver_masks(dist).values():
        ok &= (subsets & s) != 0
        budget.check()
    sizes = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        sizes += (subsets >> b) & 1
    counts = np.bincount(sizes[ok], minlength=n + 1)
    return _census_from_counts(n, [int(c) for c in counts], "enumeration")


def census_by_twin_classes(graph: SimpleGraph, budget: Budget | float | None = None) -> ResolvingCensus:
    """Count resolving sets by which twin classes lose one vertex.

    Distances only depend on twin classes, so whether a set resolves depends
    only on the set of classes it leaves incomplete; each such pattern
    stands for Π |class| sets.
    """
    _require_connected(graph)
    budget = Budget.coerce(budget, "resolving census (twin classes)")
    n = graph.vertex_count
    tp = twin_partition(graph)
    classes = tp.classes
    m = len(classes)
    dist = all_pairs_distances(graph)
    rep = [c[0] for c in classes]
    size = [len(c) for c in classes]
    inner = [dist[c[0]][c[1]] if len(c) > 1 else None for c in classes]

    always = {}  # resolver classes present whatever the pattern
    unless_missing = {}  # singleton resolver classes, present unless left out
    for k, l in combinations(range(m), 2):
        dkl = dist[rep[k]][rep[l]]
        a = b = 0
        for j in range(m):
            if j in (k, l):
                if size[j] >= 2 and inner[j] != dkl:
                    a |= 1 << j
            elif dist[rep[j]][rep[k]] != dist[rep[j]][rep[l]]:
                if size[j] >= 2:
                    a |= 1 << j
                else:
                    b |= 1 << j
        always[k, l] = a
        unless_missing[k, l] = b

    counts = [0] * (n + 1)
    for pattern in range(1 << m):
        budget.tick()
        missing = list(bits(pattern))
        feasible = True
        for k, l in combinations(missing, 2):
            if not always[k, l] and not unless_missing[k, l] & ~pattern:
                feasible = False
                break
        if feasible:
            counts[n - len(missing)] += math.prod(size[k] for k in missing)
    return _census_from_counts(n, counts, "twin-classes")


def resolving_census(graph: SimpleGraph, budget: Budget | float | None = 120.0) -> ResolvingCensus:
    """Exact r_i.  Both counting methods run, and must agree, up to 16 vertices."""
    _require_connected(graph)
    budget = Budget.coerce(budget, "resolving census")
    factored = census_by_twin_classes(graph, budget)
    if graph.vertex_count <= ENUMERATION_LIMIT:
        brute = census_by_enumeration(graph, budget)
        if brute.counts != factored.counts:
            raise AssertionError("twin-class census disagrees with subset enumeration")
        return ResolvingCensus(brute.dim, brute.counts, "enumeration+twin-classes")
    return factored


# strong metric dimension

def strongly_resolves(dist, z: int, u: int, v: int) -> bool:
    return dist[z][u] == dist[z][v] + dist[v][u] or dist[z][v] == dist[z][u] + dist[u][v]


def strong_resolving_graph(graph: SimpleGraph) -> SimpleGraph:
    """Edges join mutually maximally distant pairs."""
    dist = all_pairs_distances(graph)
    n = graph.vertex_count
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            d = dist[u][v]
            if all(dist[w][v] <= d for w in bits(graph.adjacency[u])) and \
               all(dist[u][w] <= d for w in bits(graph.adjacency[v])):
                edges.append((u, v))
    return SimpleGraph.from_edges(n, edges)


def sdim_by_quotient(graph: SimpleGraph) -> int:
    """|V| - ω of the closed-twin quotient; valid for diameter at most 2."""
    return graph.vertex_count - clique_number(quotient_by_closed_twins(graph))


def sdim_by_definition(graph: SimpleGraph) -> int:
    """Vertex cover number of the strong resolving graph."""
    return min_vertex_cover_direct(strong_resolving_graph(graph))


def strong_metric_dimension(graph: SimpleGraph) -> int:
    _require_connected(graph)
    n = graph.vertex_count
    if n <= 1:
        return 0
    dist = all_pairs_distances(graph)
    diameter = max(max(row) for row in dist)
    if diameter <= 2:
        value = sdim_by_quotient(graph)
        if n <= DEFINITION_ROUTE_LIMIT and sdim_by_definition(graph) != value:
            raise AssertionError("strong metric dimension routes disagree")
        return value
    if n <= DEFINITION_ROUTE_LIMIT:
        return sdim_by_definition(graph)
    raise PreconditionError("diameter > 2 and too many vertices for the definition route")
