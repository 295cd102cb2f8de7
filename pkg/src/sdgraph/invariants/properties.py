"""Boolean graph properties: perfectness, closure, interior versus center."""

from __future__ import annotations

from dataclasses import dataclass

from ..budget import Budget
from ..graphs import SimpleGraph, bits, twin_partition
from ..groups import FiniteGroup, is_ac_group
from .distance import distance_profile

FULL_SEARCH_LIMIT = 20


def find_odd_hole(graph: SimpleGraph, budget: Budget | None = None) -> tuple[int, ...] | None:
    """An induced odd cycle of length >= 5, or None.

    Induced paths are grown from their least vertex s; a new vertex may not
    touch any interior path vertex, and touching s closes the cycle.
    """
    adj = graph.adjacency
    n = graph.vertex_count

    def grow(path: list[int], blocked: int) -> tuple[int, ...] | None:
        if budget is not None:
            budget.tick()
        s, last = path[0], path[-1]
        for w in bits(adj[last] & ~blocked):
            if w <= s:
                continue
            if adj[s] >> w & 1:
                if len(path) >= 4 and len(path) % 2 == 0:
                    return tuple(path + [w])
                continue
            # blocked grows by the closed neighbourhood of the old last vertex
            nb = blocked | adj[last] | (1 << last) if len(path) > 1 else blocked | (1 << last)
            found = grow(path + [w], nb | (1 << w))
            if found:
                return found
        return None

    for s in range(n):
        for p1 in bits(adj[s]):
            if p1 <= s:
                continue
            found = grow([s, p1], (1 << s) | (1 << p1))
            if found:
                return found
    return None


def _holes_or_antiholes(graph: SimpleGraph, budget: Budget | None) -> tuple[int, ...] | None:
    hole = find_odd_hole(graph, budget)
    if hole:
        return hole
    return find_odd_hole(graph.complement(), budget)


def perfectness(graph: SimpleGraph, budget: Budget | float | None = 120.0) -> bool:
    """No odd hole and no odd antihole (strong perfect graph theorem).

    A hole or antihole meets each twin class at most once, so the search
    runs on one representative per class; small graphs are also searched
    in full and the two answers must agree.
    """
    budget = Budget.coerce(budget, "perfectness")
    reps = [c[0] for c in twin_partition(graph).classes]
    reduced = _holes_or_antiholes(graph.induced(reps), budget) is None
    if graph.vertex_count <= FULL_SEARCH_LIMIT:
        full = _holes_or_antiholes(graph, budget) is None
        if full != reduced:
            raise AssertionError("twin-reduced hole search disagrees with the full search")
    return reduced


def closure(graph: SimpleGraph) -> SimpleGraph:
    """Repeatedly join non-adjacent pairs whose degree sum is at least |V|."""
    n = graph.vertex_count
    rows = list(graph.adjacency)
    deg = list(graph.degrees)
    changed = True
    while changed:
        changed = False
        for u in range(n):
            for v in range(u + 1, n):
                if not rows[u] >> v & 1 and deg[u] + deg[v] >= n:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                    deg[u] += 1
                    deg[v] += 1
                    changed = True
    return SimpleGraph(n, tuple(rows), graph.labels)


def closure_closed(graph: SimpleGraph) -> bool:
    return closure(graph).adjacency == graph.adjacency


@dataclass(frozen=True)
class CenterInteriorCheck:
    interior: frozenset[int]
    center: frozenset[int]
    is_ac_group: bool
    centralizers_exceed_two: bool

    @property
    def equal(self) -> bool:
        return self.interior == self.center

    @property
    def predicate(self) -> bool:
        return self.is_ac_group and self.centralizers_exceed_two

    @property
    def iff_holds(self) -> bool:
        """Whether Int = Cen coincides with (AC-group and all |C_G(x)| > 2)."""
        return self.equal == self.predicate

    def __bool__(self) -> bool:
        return self.equal


def interior_equals_center(graph: SimpleGraph, group: FiniteGroup) -> CenterInteriorCheck:
    prof = distance_profile(graph)
    return CenterInteriorCheck(
        interior=prof.interior_set,
        center=prof.center_set,
        is_ac_group=is_ac_group(group),
        centralizers_exceed_two=all(len(c) > 2 for c in group.centralizers),
    )
