"""Detour (longest simple path) distances and Hamiltonicity.

Longest paths are found by a memoised branch-and-bound search over twin
classes: twins are interchangeable, so a partial path is summarised by the
class of its last vertex and how many vertices of each class remain.
"""

from __future__ import annotations

import sys
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from ..budget import Budget
from ..graphs import SimpleGraph, bits, popcount, twin_partition

NO_PATH = -1


class _ClassSearch:
    """Longest s-t path on the twin-class skeleton with s and t split off."""

    def __init__(self, graph: SimpleGraph, s: int, t: int, budget: Budget):
        tp = twin_partition(graph)
        members, closed = [], []
        for cls, kind in zip(tp.classes, tp.kinds):
            rest = [v for v in cls if v not in (s, t)]
            if rest:
                members.append(rest)
                closed.append(kind == "closed")
        members += [[s], [t]]
        closed += [False, False]
        self.k = len(members)
        self.src, self.dst = self.k - 2, self.k - 1
        reps = [m[0] for m in members]
        self.adj = [
            [(i == j and closed[i]) or (i != j and graph.adjacent(reps[i], reps[j])) for j in range(self.k)]
            for i in range(self.k)
        ]
        deg = [graph.degrees[r] for r in reps]
        # ascending degree, class index breaks ties
        self.moves = [
            [j for j in sorted(range(self.k), key=lambda j: (deg[j], j)) if self.adj[i][j] and j != self.dst]
            for i in range(self.k)
        ]
        self.start = tuple(len(m) if i < self.src else 0 for i, m in enumerate(members))
        self.budget = budget
        self.memo: dict = {}

    def _reachable(self, cur: int, counts: tuple[int, ...]) -> tuple[int, bool]:
        """Remaining vertices reachable from ``cur``, and whether t is reachable."""
        seen: set[int] = set()
        stack = [cur]
        total = 0
        hit = False
        while stack:
            i = stack.pop()
            if self.adj[i][self.dst]:
                hit = True
            for j in self.moves[i]:
                if counts[j] and j not in seen:
                    seen.add(j)
                    total += counts[j]
                    stack.append(j)
        return total, hit

    def longest(self, cur: int, counts: tuple[int, ...]) -> int:
        key = (cur, counts)
        memo = self.memo
        if key in memo:
            return memo[key]
        self.budget.tick()
        bound, hit = self._reachable(cur, counts)
        if not hit:
            memo[key] = NO_PATH
            return NO_PATH
        best = 1 if self.adj[cur][self.dst] else NO_PATH
        ceiling = bound + 1
        if best < ceiling:
            for j in self.moves[cur]:
                c = counts[j]
                if not c:
                    continue
                nxt = counts[:j] + (c - 1,) + counts[j + 1:]
                sub = self.longest(j, nxt)
                if sub != NO_PATH and sub + 1 > best:
                    best = sub + 1
                    if best >= ceiling:
                        break
        memo[key] = best
        return best

    def run(self) -> int:
        return self.longest(self.src, self.start)


def longest_path_length(graph: SimpleGraph, s: int, t: int, budget: Budget | float | None = 120.0) -> int:
    """Detour distance d_D(s, t); ``NO_PATH`` when s and t are disconnected."""
    if s == t:
        return 0
    budget = Budget.coerce(budget, "longest path")
    limit = sys.getrecursionlimit()
    if limit < 4 * graph.vertex_count + 100:
        sys.setrecursionlimit(4 * graph.vertex_count + 100)
    return _ClassSearch(graph, s, t, budget).run()


def longest_path_brute(graph: SimpleGraph, s: int, t: int) -> int:
    """Plain DFS over all simple s-t paths; exponential, for small graphs."""
    if s == t:
        return 0
    adj = graph.adjacency
    best = NO_PATH

    def dfs(v: int, visited: int, length: int) -> None:
        nonlocal best
        for u in bits(adj[v] & ~visited):
            if u == t:
                best = max(best, length + 1)
            else:
                dfs(u, visited | (1 << u), length + 1)

    dfs(s, 1 << s, 0)
    return best


@dataclass(frozen=True)
class DetourProfile:
    ddist: tuple[tuple[int, ...], ...]
    decc: tuple[int, ...]
    drad: int
    ddiam: int
    detour_degree: tuple[int, ...]
    detour_degree_sequence: tuple[int, ...]
    dds: tuple[tuple[int, ...], ...]
    average_detour_degree: Fraction


def detour_matrix(graph: SimpleGraph, budget: Budget | float | None = 120.0) -> list[list[int]]:
    """All-pairs detour distances.

    d_D(s, t) only depends on the twin classes of s and t (and whether they
    coincide), so one search per class pair suffices.
    """
    budget = Budget.coerce(budget, "detour distances")
    n = graph.vertex_count
    tp = twin_partition(graph)
    cls = tp.class_of()
    cache: dict[tuple[int, int, bool], int] = {}
    out = [[0] * n for _ in range(n)]
    for s in range(n):
        for t in range(s + 1, n):
            key = (cls[s], cls[t], cls[s] == cls[t])
            if key not in cache:
                cache[key] = longest_path_length(graph, s, t, budget)
            out[s][t] = out[t][s] = cache[key]
    return out


def detour_profile(graph: SimpleGraph, budget: Budget | float | None = 120.0) -> DetourProfile:
    n = graph.vertex_count
    dd = detour_matrix(graph, budget)
    decc = tuple(max(max(row), 0) for row in dd)
    degree = tuple(sum(1 for u in range(n) if u != v and dd[v][u] == decc[v]) if decc[v] else 0
                   for v in range(n))
    dds = []
    for v in range(n):
        c = Counter(d for d in dd[v] if d != NO_PATH)
        dds.append(tuple(c.get(i, 0) for i in range(decc[v] + 1)))
    return DetourProfile(
        ddist=tuple(tuple(r) for r in dd),
        decc=decc,
        drad=min(decc, default=0),
        ddiam=max(decc, default=0),
        detour_degree=degree,
        detour_degree_sequence=tuple(sorted(degree, reverse=True)),
        dds=tuple(dds),
        average_detour_degree=Fraction(sum(degree), n) if n else Fraction(0),
    )


# Hamiltonicity

def _cut_certificate(graph: SimpleGraph) -> tuple[int, ...] | None:
    """A vertex set S whose removal leaves more than |S| components, if one is cheap to find."""
    n = graph.vertex_count
    candidates = [1 << v for v in range(n)]
    universal = sum(1 << v for v in range(n) if graph.degrees[v] == n - 1)
    if universal:
        candidates.append(universal)
    tp = twin_partition(graph)
    candidates += [sum(1 << v for v in c) for c in tp.classes if len(c) > 1]
    for s in candidates:
        if len(graph.components(graph.full_mask & ~s)) > popcount(s):
            return tuple(bits(s))
    return None


def hamiltonicity(graph: SimpleGraph, budget: Budget | float | None = 120.0) -> bool:
    """Exact Hamiltonian-cycle test.

    A cut set leaving too many components refutes at once; otherwise a
    Hamiltonian s-t path is sought for some neighbour t of vertex 0.
    """
    n = graph.vertex_count
    if n < 3 or not graph.is_connected:
        return False
    if min(graph.degrees) < 2:
        return False
    if _cut_certificate(graph) is not None:
        return False
    budget = Budget.coerce(budget, "hamiltonicity")
    tp = twin_partition(graph)
    cls = tp.class_of()
    tried = set()
    for t in graph.neighbors(0):
        key = (cls[t], cls[t] == cls[0])
        if key in tried:
            continue
        tried.add(key)
        if longest_path_length(graph, 0, t, budget) == n - 1:
            return True
    return False


def eulerian(graph: SimpleGraph) -> bool:
    """Connected with every degree even (isolated graph K_1 counts as Eulerian)."""
    return graph.is_connected and all(d % 2 == 0 for d in graph.degrees)
