"""Statements about Δ(G) that hold for every finite group, checked on one group."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import SimpleGraph, commuting_graph, shape_of
from .groups import FiniteGroup, GroupProfile, is_commutative_subset, profile
from .invariants import (
    clique_number,
    distance_profile,
    edge_connectivity,
    interior_equals_center,
    matching_number,
    vertex_connectivity,
)


@dataclass(frozen=True)
class LawCheck:
    name: str
    expected: object
    computed: object
    holds: bool | None  # None: precondition not met
    detail: str = ""


def max_abelian_subgroup_by_generation(g: FiniteGroup) -> int:
    """Largest abelian subgroup, grown element by element from the trivial group.

    Independent of the commuting graph: every abelian subgroup is reached by
    repeatedly adjoining an element that commutes with the current subgroup.
    """
    cents = g.centralizers

    def generated(gens: frozenset[int]) -> frozenset[int]:
        out = {g.identity}
        frontier = [g.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = g.mul(x, s)
                    if y not in out:
                        out.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(out)

    seen: set[frozenset[int]] = set()
    stack = [frozenset({g.identity})]
    best = 1
    while stack:
        h = stack.pop()
        if h in seen:
            continue
        seen.add(h)
        best = max(best, len(h))
        common = frozenset(range(g.order))
        for x in h:
            common &= cents[x]
        for x in common - h:
            stack.append(generated(h | {x}))
    return best


def _matching_law(g: FiniteGroup, prof: GroupProfile, alpha_p: int) -> LawCheck:
    m = g.order
    t = prof.involution_count_noncentral
    z = len(prof.center)
    if m % 2:
        exp = (m - 1) // 2
        return LawCheck("matching", exp, alpha_p, alpha_p == exp, "odd order")
    if t <= z:
        exp = m // 2
        return LawCheck("matching", exp, alpha_p, alpha_p == exp, "even order, t <= |Z|")
    lo, hi = (m + z - t) // 2, m // 2
    return LawCheck("matching", [lo, hi], alpha_p, lo <= alpha_p <= hi, "even order, t > |Z|: bounds")


def check_laws(g: FiniteGroup, graph: SimpleGraph | None = None) -> list[LawCheck]:
    graph = graph or commuting_graph(g)
    prof = profile(g)
    n = g.order
    dist = distance_profile(graph)
    out = []

    closed = all(graph.closed_nbhd(x) == sum(1 << y for y in prof.centralizers[x]) for x in range(n))
    out.append(LawCheck("closed_neighbourhood_is_centralizer", True, closed, closed))

    kp = edge_connectivity(graph)
    exp = n // prof.max_class_size - 1
    out.append(LawCheck("edge_connectivity", exp, kp, kp == exp, "|G| / max|cl| - 1"))
    out.append(_matching_law(g, prof, matching_number(graph)))

    z = prof.center
    ecc_exp = frozenset(range(n)) - {g.identity} if len(z) == 1 else frozenset(range(n))
    out.append(LawCheck("eccentric_vertices", sorted(ecc_exp), sorted(dist.eccentric_vertex_set),
                        dist.eccentric_vertex_set == ecc_exp))
    out.append(LawCheck("boundary_equals_eccentric", sorted(dist.eccentric_vertex_set),
                        sorted(dist.boundary_set), dist.boundary_set == dist.eccentric_vertex_set))
    out.append(LawCheck("center_equals_group_center", sorted(z), sorted(dist.center_set), dist.center_set == z))

    complete_exp = frozenset(x for x in range(n) if is_commutative_subset(g, prof.centralizers[x]))
    out.append(LawCheck("complete_vertex_iff_abelian_centralizer", sorted(complete_exp),
                        sorted(dist.complete_vertex_set), dist.complete_vertex_set == complete_exp))

    omega = clique_number(graph)
    abel = max_abelian_subgroup_by_generation(g)
    out.append(LawCheck("clique_is_max_abelian_subgroup", abel, omega, omega == abel))

    # κ = |Z| once some maximal centralizer is abelian
    noncentral = [x for x in range(n) if x not in z]
    cents = prof.centralizers
    maximal = [x for x in noncentral if not any(cents[x] < cents[y] for y in noncentral)]
    if noncentral and any(is_commutative_subset(g, cents[x]) for x in maximal):
        k = vertex_connectivity(graph)
        out.append(LawCheck("vertex_connectivity", len(z), k, k == len(z), "abelian maximal centralizer"))
    else:
        out.append(LawCheck("vertex_connectivity", None, None, None, "no abelian maximal centralizer"))

    shape = shape_of(graph)
    if shape is not None and shape.center_size == len(z) and not g.is_abelian:
        out.append(LawCheck("join_shape_implies_ac", True, prof.is_ac_group, prof.is_ac_group))

    if not g.is_abelian:
        ic = interior_equals_center(graph, g)
        out.append(LawCheck(
            "interior_center_iff", ic.predicate, ic.equal, ic.iff_holds,
            f"Int={sorted(ic.interior)} Cen={sorted(ic.center)}",
        ))
    return out
