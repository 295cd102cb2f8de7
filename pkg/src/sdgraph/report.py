"""Run the oracles on one graph and collect the results.

Every entry is tagged ``exact`` or ``budget_exceeded``; a value is never
filled in from a formula.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .budget import DEFAULT_BUDGET, Budget, BudgetExceeded
from .graphs import JoinUnionShape, SimpleGraph, automorphism_count, shape_of
from .groups import FiniteGroup
from .invariants import (
    clique_number,
    closure_closed,
    covers,
    detour_profile,
    distance_profile,
    edge_connectivity,
    eulerian,
    hamiltonicity,
    independence_number,
    interior_equals_center,
    matching_number,
    metric_dimension,
    min_degree,
    perfectness,
    resolving_census,
    strong_metric_dimension,
    vertex_connectivity,
)
from .invariants.resolving import PreconditionError
from .linalg import BigPolynomial, SpectrumMultiset, char_poly, laplacian, laplacian_spectrum, spanning_tree_count

EXACT = "exact"
BUDGET_EXCEEDED = "budget_exceeded"
NOT_APPLICABLE = "not_applicable"

# integers that can outgrow a double are always written as strings
BIG_FIELDS = frozenset({"spanning_trees", "aut_order"})


def to_jsonable(value: Any, key: str | None = None) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value) if key in BIG_FIELDS else value
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, BigPolynomial):
        return value.to_json()
    if isinstance(value, SpectrumMultiset):
        return value.to_json()
    if isinstance(value, JoinUnionShape):
        return value.to_json()
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(v) for v in value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v, key) for k, v in sorted(value.items())}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v, key) for v in value]
    raise TypeError(f"cannot serialise {type(value).__name__}")


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


@dataclass
class Entry:
    status: str
    value: Any = None
    elapsed: float = 0.0
    bounds: tuple | None = None
    message: str = ""

    def to_json(self, key: str, timing: bool = True) -> dict:
        out = {"status": self.status, "value": to_jsonable(self.value, key)}
        if self.bounds is not None:
            out["bounds"] = list(self.bounds)
        if self.message:
            out["message"] = self.message
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


@dataclass
class InvariantReport:
    vertex_count: int
    entries: dict[str, Entry] = field(default_factory=dict)
    connected: bool = True

    def value(self, name: str) -> Any:
        e = self.entries.get(name)
        return None if e is None or e.status != EXACT else e.value

    def gallai_holds(self) -> bool | None:
        a, b = self.value("alpha"), self.value("beta")
        if a is None or b is None:
            return None
        ok = a + b == self.vertex_count
        ap, bp = self.value("alpha_prime"), self.value("beta_prime")
        if ap is not None and bp is not None:
            ok = ok and ap + bp == self.vertex_count
        return ok

    def connectivity_chain_holds(self) -> bool | None:
        k, kp, d = self.value("kappa"), self.value("kappa_prime"), self.value("delta")
        if None in (k, kp, d):
            return None
        return k <= kp <= d

    def to_json(self, timing: bool = True) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "connected": self.connected,
            "invariants": {k: self.entries[k].to_json(k, timing) for k in sorted(self.entries)},
        }


ALL_INVARIANTS = (
    "vertex_count", "edge_count", "center_size", "shape",
    "omega", "alpha", "alpha_prime", "beta", "beta_prime",
    "kappa", "kappa_prime", "delta", "dim", "sdim", "aut_order",
    "spectrum", "char_poly", "spanning_trees", "resolving_polynomial",
    "hamiltonian", "eulerian", "perfect", "closed", "eccentric_graph",
    "interior_equals_center",
    "detour_radius", "detour_diameter", "detour_ecc", "detour_degree", "detour_dds",
    "detour_degree_sequence", "average_detour_degree",
)

_DETOUR_FIELDS = frozenset(n for n in ALL_INVARIANTS if n.startswith("detour") or n == "average_detour_degree")


def _per_class(values: list, classes: dict[str, list[int]]) -> dict:
    """One value per vertex class, or the distinct values when a class is not uniform."""
    out = {}
    for name, members in classes.items():
        seen = sorted({values[v] for v in members})
        out[name] = seen[0] if len(seen) == 1 else {"nonuniform": seen}
    return out


def sd_vertex_classes(group: FiniteGroup) -> dict[str, list[int]]:
    """central / rotation / reflection classes for a group built by ``sd8n_construct``."""
    n = group.metadata["n"]
    z = group.center
    rot = 4 * n
    return {
        "central": sorted(z),
        "rotation": [v for v in range(rot) if v not in z],
        "reflection": list(range(rot, 8 * n)),
    }


def _integral_spectrum(graph: SimpleGraph) -> SpectrumMultiset:
    try:
        return laplacian_spectrum(graph)
    except ValueError as exc:
        raise PreconditionError(str(exc))


def compute_report(
    graph: SimpleGraph,
    group: FiniteGroup | None = None,
    budget: float | None = DEFAULT_BUDGET,
    invariants: tuple[str, ...] | None = None,
    classes: dict[str, list[int]] | None = None,
) -> InvariantReport:
    """Compute the requested invariants (default: all) under a per-oracle budget."""
    wanted = tuple(ALL_INVARIANTS if invariants is None else invariants)
    unknown = set(wanted) - set(ALL_INVARIANTS)
    if unknown:
        raise ValueError(f"unknown invariants: {', '.join(sorted(unknown))}")
    report = InvariantReport(graph.vertex_count, connected=graph.is_connected)
    cache: dict[str, Any] = {}

    def run(name: str, fn: Callable[[Budget], Any]) -> None:
        start = time.perf_counter()
        try:
            value = fn(Budget(budget, name))
            entry = Entry(EXACT, value)
        except BudgetExceeded as exc:
            entry = Entry(BUDGET_EXCEEDED, bounds=exc.bounds)
        except PreconditionError as exc:
            entry = Entry(NOT_APPLICABLE, message=str(exc))
        entry.elapsed = time.perf_counter() - start
        report.entries[name] = entry

    def shared(key: str, fn: Callable[[Budget], Any]) -> Callable[[Budget], Any]:
        def inner(b: Budget) -> Any:
            if key not in cache:
                cache[key] = fn(b)
            return cache[key]
        return inner

    dist = shared("distance", lambda b: distance_profile(graph))
    detour = shared("detour", lambda b: detour_profile(graph, b))
    alpha = shared("alpha", lambda b: independence_number(graph, b))
    alpha_p = shared("alpha_prime", lambda b: matching_number(graph))
    census = shared("census", lambda b: resolving_census(graph, b))
    cover = shared("covers", lambda b: covers(graph, alpha(b), alpha_p(b)))

    def need_group(fn):
        def inner(b):
            if group is None:
                raise PreconditionError("needs the underlying group")
            return fn(b)
        return inner

    def need_classes(fn):
        def inner(b):
            if classes is None:
                raise PreconditionError("needs a vertex class split")
            return fn(b)
        return inner

    oracles: dict[str, Callable[[Budget], Any]] = {
        "vertex_count": lambda b: graph.vertex_count,
        "edge_count": lambda b: graph.edge_count,
        "center_size": need_group(lambda b: len(group.center)),
        "shape": lambda b: shape_of(graph),
        "omega": lambda b: clique_number(graph, b),
        "alpha": alpha,
        "alpha_prime": alpha_p,
        "beta": lambda b: cover(b)[0],
        "beta_prime": lambda b: cover(b)[1],
        "kappa": lambda b: vertex_connectivity(graph),
        "kappa_prime": lambda b: edge_connectivity(graph),
        "delta": lambda b: min_degree(graph),
        "dim": lambda b: metric_dimension(graph, b)[0],
        "sdim": lambda b: strong_metric_dimension(graph),
        "aut_order": lambda b: automorphism_count(graph, b),
        "spectrum": lambda b: _integral_spectrum(graph),
        "char_poly": lambda b: char_poly(laplacian(graph)),
        "spanning_trees": lambda b: spanning_tree_count(graph),
        "resolving_polynomial": lambda b: census(b).polynomial,
        "hamiltonian": lambda b: hamiltonicity(graph, b),
        "eulerian": lambda b: eulerian(graph),
        "perfect": lambda b: perfectness(graph, b),
        "closed": lambda b: closure_closed(graph),
        "eccentric_graph": lambda b: dist(b).is_eccentric_graph,
        "interior_equals_center": need_group(lambda b: interior_equals_center(graph, group).equal),
        "detour_radius": lambda b: detour(b).drad,
        "detour_diameter": lambda b: detour(b).ddiam,
        "detour_ecc": need_classes(lambda b: _per_class(list(detour(b).decc), classes)),
        "detour_degree": need_classes(lambda b: _per_class(list(detour(b).detour_degree), classes)),
        "detour_dds": need_classes(lambda b: _per_class(list(detour(b).dds), classes)),
        "detour_degree_sequence": lambda b: detour(b).detour_degree_sequence,
        "average_detour_degree": lambda b: detour(b).average_detour_degree,
    }
    for name in wanted:
        if name in report.entries:
            continue
        run(name, oracles[name])
        # one detour timeout settles every detour-derived field
        if name in _DETOUR_FIELDS and report.entries[name].status == BUDGET_EXCEEDED:
            for other in wanted:
                if other in _DETOUR_FIELDS and other not in report.entries:
                    report.entries[other] = Entry(BUDGET_EXCEEDED)
    return report
