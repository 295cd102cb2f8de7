from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings

from sdgraph.budget import BudgetExceeded
from sdgraph.graphs import SimpleGraph, commuting_graph
from sdgraph.groups import frobenius_21, sd_element, symmetric_group
from sdgraph.invariants import (
    closure_closed,
    detour_profile,
    distance_profile,
    eulerian,
    hamiltonicity,
    interior_equals_center,
    perfectness,
)
from sdgraph.invariants.detour import longest_path_brute, longest_path_length
from sdgraph.invariants.properties import closure, find_odd_hole

from conftest import graphs, to_nx


@given(graphs(max_n=8))
def test_longest_path_matches_brute(G):
    for s in range(G.vertex_count):
        for t in range(G.vertex_count):
            assert longest_path_length(G, s, t) == longest_path_brute(G, s, t)


@given(graphs(max_n=8, connected=True))
def test_detour_profile_invariants(G):
    p = detour_profile(G)
    d = distance_profile(G)
    n = G.vertex_count
    for u in range(n):
        assert p.ddist[u][u] == 0
        for v in range(n):
            assert p.ddist[u][v] == p.ddist[v][u] >= d.dist[u][v]
        row = p.dds[u]
        assert sum(row) == n and row[0] == 1
        assert len(row) == p.decc[u] + 1
        if n > 1:
            assert row[-1] == p.detour_degree[u]
    assert p.detour_degree_sequence == tuple(sorted(p.detour_degree, reverse=True))
    assert p.average_detour_degree * n == sum(p.detour_degree)


def test_detour_sd16(sd):
    p = detour_profile(sd(2)[1])
    assert (p.drad, p.ddiam) == (9, 11)
    e, a, ab = sd_element(2, 0), sd_element(2, 1), sd_element(2, 1, True)
    assert (p.detour_degree[e], p.detour_degree[ab], p.detour_degree[a]) == (14, 12, 8)
    assert p.dds[a] == (1,) + (0,) * 8 + (7, 0, 8)
    assert p.detour_degree_sequence == (14,) * 2 + (12,) * 8 + (8,) * 6
    assert p.average_detour_degree == pytest.approx(43 / 4)


def test_detour_sd24_is_bounded_by_order(sd):
    # 24 vertices: no simple path is longer than 23
    p = detour_profile(sd(3)[1])
    assert p.ddiam <= 23
    assert p.drad == 23


def test_detour_budget():
    from sdgraph.invariants.detour import detour_matrix

    # a cubic graph without twins forces a real search
    h = nx.random_regular_graph(3, 40, seed=1)
    G = SimpleGraph.from_edges(40, h.edges())
    with pytest.raises(BudgetExceeded):
        detour_matrix(G, budget=1e-6)


def brute_hamiltonian(G):
    n = G.vertex_count
    if n < 3:
        return False
    for perm in permutations(range(1, n)):
        cyc = (0,) + perm
        if all(G.adjacent(cyc[i], cyc[(i + 1) % n]) for i in range(n)):
            return True
    return False


@settings(max_examples=40)
@given(graphs(max_n=7))
def test_hamiltonicity_brute(G):
    assert hamiltonicity(G) == brute_hamiltonian(G)


def test_hamiltonicity_sd(sd):
    assert hamiltonicity(sd(2)[1]) is False
    assert hamiltonicity(sd(3)[1]) is True
    assert hamiltonicity(sd(5)[1]) is False
    assert hamiltonicity(sd(1)[1]) is True


@given(graphs())
def test_eulerian_matches_networkx(G):
    g = to_nx(G)
    expected = nx.is_connected(g) and all(d % 2 == 0 for _, d in g.degree()) if G.vertex_count else False
    assert eulerian(G) == expected


def test_eulerian_examples(sd):
    assert eulerian(SimpleGraph.cycle(5))
    assert not eulerian(sd(2)[1]) and not eulerian(sd(3)[1])


def brute_perfect(G):
    """Perfect iff ω = χ for every induced subgraph (direct definition)."""
    g = to_nx(G)
    n = G.vertex_count
    for mask in range(1, 1 << n):
        nodes = [v for v in range(n) if mask >> v & 1]
        h = g.subgraph(nodes)
        omega = max(len(c) for c in nx.find_cliques(h))
        chi = _chromatic(h)
        if omega != chi:
            return False
    return True


def _chromatic(h):
    nodes = list(h.nodes)
    for k in range(1, len(nodes) + 1):
        colors = {}

        def place(i):
            if i == len(nodes):
                return True
            v = nodes[i]
            for c in range(k):
                if all(colors.get(u) != c for u in h[v]):
                    colors[v] = c
                    if place(i + 1):
                        return True
                    del colors[v]
            return False

        if place(0):
            return k
    return 0


@settings(max_examples=25)
@given(graphs(max_n=7))
def test_perfectness_by_definition(G):
    assert perfectness(G) == brute_perfect(G)


def test_perfectness_examples(sd):
    assert perfectness(sd(2)[1]) and perfectness(sd(3)[1])
    assert not perfectness(SimpleGraph.cycle(5))
    assert not perfectness(SimpleGraph.cycle(7).complement())
    assert find_odd_hole(SimpleGraph.cycle(6)) is None


def test_closure(sd):
    assert closure_closed(sd(2)[1]) and closure_closed(sd(3)[1])
    # P_4: the non-adjacent pairs have degree sums 2, 3, 3, all below 4
    assert closure_closed(SimpleGraph.path(4))
    # C_4 with one chord: the two degree-2 vertices sum to 4 and get joined
    g = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert closure(g).edge_count == 6


@given(graphs(max_n=8))
def test_closure_fixpoint(G):
    c = closure(G)
    n = G.vertex_count
    for u in range(n):
        for v in range(u + 1, n):
            if not c.adjacent(u, v):
                assert c.degrees[u] + c.degrees[v] < n
    assert all(G.adjacency[v] & ~c.adjacency[v] == 0 for v in range(n))


def test_interior_center_s3():
    g = symmetric_group(3)
    chk = interior_equals_center(commuting_graph(g), g)
    # computed from the definitions: e alone is interior and central
    assert chk.interior == chk.center == {g.identity}
    assert not chk.centralizers_exceed_two


def test_interior_center_f21():
    g = frobenius_21()
    chk = interior_equals_center(commuting_graph(g), g)
    assert chk.equal and chk.predicate and chk.iff_holds


def test_interior_empty_when_center_large(sd):
    # a central vertex is a boundary vertex of any other central vertex
    for n in (2, 3):
        g, G = sd(n)
        chk = interior_equals_center(G, g)
        assert chk.interior == frozenset() and chk.center == g.center
