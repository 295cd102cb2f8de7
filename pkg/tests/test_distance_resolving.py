from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from sdgraph.graphs import SimpleGraph, commuting_graph, twin_partition
from sdgraph.groups import symmetric_group
from sdgraph.invariants import (
    PreconditionError,
    distance_profile,
    metric_dimension,
    resolving_census,
    strong_metric_dimension,
)
from sdgraph.invariants.distance import all_pairs_distances
from sdgraph.invariants.resolving import (
    census_by_enumeration,
    census_by_twin_classes,
    is_resolving,
    sdim_by_definition,
    strongly_resolves,
)

from conftest import graphs, to_nx


@given(graphs(max_n=9))
def test_distances_match_networkx(G):
    d = all_pairs_distances(G)
    ref = dict(nx.all_pairs_shortest_path_length(to_nx(G)))
    for u in range(G.vertex_count):
        for v in range(G.vertex_count):
            assert d[u][v] == ref[u].get(v)


@given(graphs(max_n=9, connected=True))
def test_distance_profile_invariants(G):
    p = distance_profile(G)
    n = G.vertex_count
    for u in range(n):
        assert p.dist[u][u] == 0
        for v in range(n):
            assert p.dist[u][v] == p.dist[v][u]
            for w in range(n):
                assert p.dist[u][w] <= p.dist[u][v] + p.dist[v][w]
    assert p.radius == min(p.ecc) and p.diameter == max(p.ecc)
    assert p.center_set == {v for v in range(n) if p.ecc[v] == p.radius}
    # interior and boundary partition V
    assert p.boundary_set | p.interior_set == set(range(n))
    assert not p.boundary_set & p.interior_set or n == 1
    if n > 1:
        assert nx.radius(to_nx(G)) == p.radius and nx.diameter(to_nx(G)) == p.diameter


def test_sd16_distance(sd):
    p = distance_profile(sd(2)[1])
    assert p.diameter == 2 and p.center_set == {0, 4}
    assert p.is_eccentric_graph


def test_s3_eccentric():
    g = symmetric_group(3)
    p = distance_profile(commuting_graph(g))
    assert p.eccentric_vertex_set == set(range(6)) - {g.identity}


def brute_dim(G):
    d = all_pairs_distances(G)
    for k in range(0, G.vertex_count + 1):
        for s in combinations(range(G.vertex_count), k):
            if is_resolving(d, s):
                return k, s


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=8, connected=True))
def test_metric_dimension_brute(G):
    dim, witness = metric_dimension(G)
    assert (dim, witness) == brute_dim(G)


def test_metric_dimension_examples(sd):
    assert metric_dimension(sd(2)[1])[0] == 10
    assert metric_dimension(sd(3)[1])[0] == 19
    assert metric_dimension(sd(1)[1])[0] == 7


def test_metric_dimension_requires_connected():
    with pytest.raises(PreconditionError):
        metric_dimension(SimpleGraph.empty(3))


@given(graphs(min_n=2, max_n=9, connected=True))
def test_twin_census_equals_enumeration(G):
    a = census_by_twin_classes(G)
    b = census_by_enumeration(G)
    assert a.counts == b.counts
    n = G.vertex_count
    assert a.r(n) == 1 and a.r(n - 1) == n
    assert a.dim == metric_dimension(G)[0]
    assert all(a.r(i) == 0 for i in range(a.dim)) and a.r(a.dim) >= 1


@given(graphs(min_n=2, max_n=7, connected=True))
def test_supersets_resolve(G):
    d = all_pairs_distances(G)
    n = G.vertex_count
    for k in range(n + 1):
        for s in combinations(range(n), k):
            if is_resolving(d, s):
                for extra in range(n):
                    assert is_resolving(d, set(s) | {extra})


def test_census_sd16(sd):
    c = resolving_census(sd(2)[1])
    assert c.dim == 10
    assert (c.r(10), c.r(11), c.r(13), c.r(14), c.r(15), c.r(16)) == (192, 512, 320, 100, 16, 1)


def test_census_k4():
    c = resolving_census(SimpleGraph.complete(4))
    assert c.dim == 3 and c.counts == {3: 4, 4: 1}


def test_census_sd24_twin_route(sd):
    c = census_by_twin_classes(sd(3)[1])
    assert c.dim == 19 and c.r(19) == 2048


def brute_sdim(G):
    d = all_pairs_distances(G)
    n = G.vertex_count
    for k in range(n + 1):
        for s in combinations(range(n), k):
            if all(any(strongly_resolves(d, z, u, v) for z in s) for u, v in combinations(range(n), 2)):
                return k


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=7, connected=True))
def test_sdim_brute(G):
    assert strong_metric_dimension(G) == brute_sdim(G) == sdim_by_definition(G)


def test_sdim_examples(sd):
    assert strong_metric_dimension(sd(2)[1]) == 14
    assert strong_metric_dimension(sd(3)[1]) == 22
    assert strong_metric_dimension(SimpleGraph.complete(6)) == 5
