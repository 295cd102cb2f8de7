"""Commuting graphs of finite groups, exact invariants, and semidihedral closed forms."""

from .budget import Budget, BudgetExceeded
from .graphs import JoinUnionShape, SimpleGraph, commuting_graph, matches_shape, twin_partition
from .groups import FiniteGroup, ingest_cayley_table, profile, sd8n_construct

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BudgetExceeded",
    "FiniteGroup",
    "JoinUnionShape",
    "SimpleGraph",
    "commuting_graph",
    "ingest_cayley_table",
    "matches_shape",
    "profile",
    "sd8n_construct",
    "twin_partition",
    "__version__",
]
