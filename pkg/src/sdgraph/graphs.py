"""Simple graphs over indexed vertices with bitset adjacency.

Adjacency rows are Python ints used as bit vectors, so set operations are
word-parallel big-int ops.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .budget import Budget, BudgetExceeded
from .groups import FiniteGroup


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    vertex_count: int
    adjacency: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(self.adjacency) != self.vertex_count:
            raise ValueError("adjacency length differs from vertex_count")
        for v, row in enumerate(self.adjacency):
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if row >> self.vertex_count:
                raise ValueError(f"vertex {v} has out-of-range neighbours")
            for u in bits(row):
                if not self.adjacency[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(labels) if labels else None)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adjacency[v]))

    def closed_nbhd(self, v: int) -> int:
        return self.adjacency[v] | (1 << v)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(popcount(r) for r in self.adjacency)

    @cached_property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in bits(self.adjacency[u] >> (u + 1) << (u + 1))]

    def complement(self) -> "SimpleGraph":
        full = self.full_mask
        return SimpleGraph(self.vertex_count, tuple(full ^ r ^ (1 << v) for v, r in enumerate(self.adjacency)), self.labels)

    def induced(self, vertices: list[int]) -> "SimpleGraph":
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(to_mask(pos[u] for u in bits(self.adjacency[v]) if u in pos))
        labels = tuple(self.labels[v] for v in vertices) if self.labels else None
        return SimpleGraph(len(vertices), tuple(rows), labels)

    def reachable(self, start: int, within: int | None = None) -> int:
        """Mask of vertices reachable from ``start`` inside ``within``."""
        allowed = self.full_mask if within is None else within
        seen = 1 << start
        frontier = seen
        adj = self.adjacency
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def components(self, within: int | None = None) -> list[int]:
        remaining = self.full_mask if within is None else within
        comps = []
        while remaining:
            v = (remaining & -remaining).bit_length() - 1
            c = self.reachable(v, remaining)
            comps.append(c)
            remaining &= ~c
        return comps

    @cached_property
    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or self.reachable(0) == self.full_mask

    def to_json(self) -> dict:
        doc = {"n": self.vertex_count, "edges": [list(e) for e in self.edges()]}
        if self.labels:
            doc["labels"] = list(self.labels)
        return doc

    def to_dimacs(self) -> str:
        lines = [f"p edge {self.vertex_count} {self.edge_count}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_json(cls, doc: dict | str) -> "SimpleGraph":
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls.from_edges(doc["n"], [tuple(e) for e in doc["edges"]], doc.get("labels"))

    @classmethod
    def from_dimacs(cls, text: str) -> "SimpleGraph":
        n, edges = None, []
        for line in text.splitlines():
            parts = line.split()
            if not parts or parts[0] == "c":
                continue
            if parts[0] == "p":
                n = int(parts[2])
            elif parts[0] == "e":
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        if n is None:
            raise ValueError("missing DIMACS header")
        return cls.from_edges(n, edges)


def commuting_graph(g: FiniteGroup, subset: Iterable[int] | None = None) -> SimpleGraph:
    """Vertices are (a subset of) group elements; distinct commuting elements are adjacent."""
    verts = list(range(g.order)) if subset is None else sorted(set(subset))
    if any(not 0 <= v < g.order for v in verts):
        raise ValueError("subset contains an element index outside the group")
    pos = {v: i for i, v in enumerate(verts)}
    t = g.table
    rows = []
    for x in verts:
        row = 0
        tx = t[x]
        for y in verts:
            if y != x and tx[y] == t[y][x]:
                row |= 1 << pos[y]
        rows.append(row)
    labels = tuple(g.name_of(v) for v in verts) if g.names else None
    return SimpleGraph(len(verts), tuple(rows), labels)


# twins

@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]  # "closed", "open" or "single"

    def class_of(self) -> list[int]:
        out = [0] * sum(len(c) for c in self.classes)
        for i, c in enumerate(self.classes):
            for v in c:
                out[v] = i
        return out

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]


def twin_partition(graph: SimpleGraph) -> TwinPartition:
    """Coarsest partition into twin classes, ordered by least vertex.

    Closed twins share N[v], open twins share N(v); the union of the two
    relations is an equivalence relation on a simple graph.
    """
    closed: dict[int, list[int]] = {}
    opened: dict[int, list[int]] = {}
    for v in range(graph.vertex_count):
        closed.setdefault(graph.closed_nbhd(v), []).append(v)
        opened.setdefault(graph.adjacency[v], []).append(v)
    assigned = [-1] * graph.vertex_count
    classes, kinds = [], []
    for v in range(graph.vertex_count):
        if assigned[v] >= 0:
            continue
        c = closed[graph.closed_nbhd(v)]
        o = opened[graph.adjacency[v]]
        if len(c) > 1:
            members, kind = c, "closed"
        elif len(o) > 1:
            members, kind = o, "open"
        else:
            members, kind = [v], "single"
        for u in members:
            assigned[u] = len(classes)
        classes.append(tuple(members))
        kinds.append(kind)
    return TwinPartition(tuple(classes), tuple(kinds))


def closed_twin_classes(graph: SimpleGraph) -> list[tuple[int, ...]]:
    groups: dict[int, list[int]] = {}
    for v in range(graph.vertex_count):
        groups.setdefault(graph.closed_nbhd(v), []).append(v)
    return sorted((tuple(c) for c in groups.values()), key=lambda c: c[0])


def quotient_by_closed_twins(graph: SimpleGraph) -> SimpleGraph:
    """One vertex per N[.]-class, adjacent when the classes are."""
    classes = closed_twin_classes(graph)
    rows = []
    for i, ci in enumerate(classes):
        row = 0
        for j, cj in enumerate(classes):
            if i == j:
                continue
            links = {graph.adjacent(u, v) for u in ci for v in cj}
            if len(links) != 1:
                raise AssertionError("closed-twin quotient is not well defined")
            if links.pop():
                row |= 1 << j
        rows.append(row)
    return SimpleGraph(len(classes), tuple(rows))


# join / union shapes

@dataclass(frozen=True)
class JoinUnionShape:
    """K_center ∨ (disjoint union of K_b for b in blocks)."""

    center_size: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks, reverse=True)))

    @property
    def vertex_count(self) -> int:
        return self.center_size + sum(self.blocks)

    def build(self) -> SimpleGraph:
        c = self.center_size
        n = self.vertex_count
        edges = [(u, v) for u in range(c) for v in range(u + 1, n)]
        start = c
        for b in self.blocks:
            edges += [(u, v) for u in range(start, start + b) for v in range(u + 1, start + b)]
            start += b
        return SimpleGraph.from_edges(n, edges)

    def automorphism_order(self) -> int:
        out = math.factorial(self.center_size)
        for b, mult in Counter(self.blocks).items():
            out *= math.factorial(b) ** mult * math.factorial(mult)
        return out

    def to_json(self) -> dict:
        return {"center_size": self.center_size, "blocks": list(self.blocks)}


def shape_of(graph: SimpleGraph) -> JoinUnionShape | None:
    """Peel universal vertices; the rest must be disjoint cliques."""
    n = graph.vertex_count
    universal = [v for v in range(n) if graph.degrees[v] == n - 1]
    rest = graph.full_mask & ~to_mask(universal)
    blocks = []
    for comp in graph.components(rest):
        size = popcount(comp)
        if any(popcount(graph.adjacency[v] & comp) != size - 1 for v in bits(comp)):
            return None
        blocks.append(size)
    return JoinUnionShape(len(universal), tuple(blocks))


def matches_shape(graph: SimpleGraph, shape: JoinUnionShape) -> bool:
    """Structural isomorphism test against K_c ∨ (⊔ K_b).

    Universal vertices of the graph form the join part, except that a single
    block of size one would itself be universal; the comparison tries both
    readings.
    """
    found = shape_of(graph)
    if found is None:
        return False
    if found == shape:
        return True
    # K_c ∨ K_1 is K_{c+1}; likewise a lone block is absorbed into the center
    if len(shape.blocks) == 1:
        return found == JoinUnionShape(shape.center_size + shape.blocks[0], ())
    return False


# automorphisms

def _orbit_stabilizer_count(adj: tuple[int, ...], colors: list, budget: Budget) -> int:
    """|Aut| of a vertex-coloured graph by the orbit-stabiliser chain.

    At level k the points 0..k-1 are fixed; the orbit of k is found by
    searching, for every candidate image, for one extending automorphism.
    """
    n = len(adj)

    def extend(mapping: list[int], used: int, order: list[int], pos: int) -> bool:
        budget.tick()
        if pos == n:
            return True
        v = order[pos]
        for w in range(n):
            if used >> w & 1 or colors[w] != colors[v]:
                continue
            ok = True
            for u in order[:pos]:
                if (adj[v] >> u & 1) != (adj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                if extend(mapping, used | (1 << w), order, pos + 1):
                    return True
        mapping[v] = -1
        return False

    total = 1
    for k in range(n):
        # vertices 0..k-1 fixed; test each image w of k
        orbit = 0
        for w in range(k, n):
            if colors[w] != colors[k]:
                continue
            mapping = [-1] * n
            used = 0
            for i in range(k):
                mapping[i] = i
                used |= 1 << i
            if used >> w & 1:
                continue
            # k first, then remaining vertices, neighbours of fixed ones early
            rest = [v for v in range(k + 1, n)]
            rest.sort(key=lambda v: (-popcount(adj[v] & ((1 << (k + 1)) - 1)), v))
            order = list(range(k)) + [k] + rest
            ok = all((adj[k] >> i & 1) == (adj[w] >> i & 1) for i in range(k))
            if not ok:
                continue
            mapping[k] = w
            if extend(mapping, used | (1 << w), order, k + 1):
                orbit += 1
        total *= orbit
    return total


def automorphism_count_backtrack(graph: SimpleGraph, budget: Budget | float | None = 60.0) -> int:
    """|Aut(Γ)| by backtracking on the whole graph, coloured by degree only."""
    budget = Budget.coerce(budget, "automorphism backtracking")
    return _orbit_stabilizer_count(graph.adjacency, list(graph.degrees), budget)


def automorphism_count(graph: SimpleGraph, budget: Budget | float | None = 60.0) -> int:
    """|Aut(Γ)| as Π |twin class|! times |Aut| of the coloured twin quotient.

    Any permutation inside a twin class is an automorphism and automorphisms
    permute twin classes, so the count factors exactly.  Raises
    ``BudgetExceeded`` rather than guessing.
    """
    budget = Budget.coerce(budget, "automorphism count")
    tp = twin_partition(graph)
    reps = [c[0] for c in tp.classes]
    q = graph.induced(reps)
    colors = [(len(c), kind if len(c) > 1 else "single", graph.degrees[c[0]]) for c, kind in zip(tp.classes, tp.kinds)]
    inner = 1
    for c in tp.classes:
        inner *= math.factorial(len(c))
    return inner * _orbit_stabilizer_count(q.adjacency, colors, budget)


__all__ = [
    "BudgetExceeded",
    "JoinUnionShape",
    "SimpleGraph",
    "TwinPartition",
    "automorphism_count",
    "automorphism_count_backtrack",
    "bits",
    "commuting_graph",
    "matches_shape",
    "popcount",
    "quotient_by_closed_twins",
    "shape_of",
    "to_mask",
    "twin_partition",
]
