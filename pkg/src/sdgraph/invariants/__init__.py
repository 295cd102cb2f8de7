"""Exact oracles for graph invariants."""

from .cliques import clique_number, independence_number, maximum_clique
from .connectivity import edge_connectivity, min_degree, vertex_connectivity
from .covers import covers
from .detour import detour_profile, eulerian, hamiltonicity
from .distance import DistanceProfile, distance_profile
from .matching import matching_number, maximum_matching
from .properties import closure_closed, interior_equals_center, perfectness
from .resolving import (
    PreconditionError,
    ResolvingCensus,
    metric_dimension,
    resolving_census,
    strong_metric_dimension,
)

__all__ = [
    "DistanceProfile",
    "PreconditionError",
    "ResolvingCensus",
    "clique_number",
    "closure_closed",
    "covers",
    "detour_profile",
    "distance_profile",
    "edge_connectivity",
    "eulerian",
    "hamiltonicity",
    "independence_number",
    "interior_equals_center",
    "matching_number",
    "maximum_clique",
    "maximum_matching",
    "metric_dimension",
    "min_degree",
    "perfectness",
    "resolving_census",
    "strong_metric_dimension",
    "vertex_connectivity",
]
