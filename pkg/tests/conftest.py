import hypothesis
import networkx as nx
import pytest
from hypothesis import strategies as st

from sdgraph.graphs import SimpleGraph, commuting_graph
from sdgraph.groups import sd8n_construct

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, chosen) if keep]
    if connected:
        # a random spanning path keeps the graph connected
        order = draw(st.permutations(range(n)))
        edges += [(min(a, b), max(a, b)) for a, b in zip(order, order[1:])]
    return SimpleGraph.from_edges(n, set(edges))


def to_nx(graph: SimpleGraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.vertex_count))
    g.add_edges_from(graph.edges())
    return g


@pytest.fixture(scope="session")
def sd():
    cache = {}

    def get(n):
        if n not in cache:
            g = sd8n_construct(n)
            cache[n] = (g, commuting_graph(g))
        return cache[n]

    return get
