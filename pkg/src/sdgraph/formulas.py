"""Closed-form predictions for the commuting graph of SD_{8n}.

Every value is a function of n and its parity alone; nothing here looks at
a group or a graph.  Vertex classes for the detour block are
``central`` (Z), ``rotation`` (<a> minus Z) and ``reflection`` (the coset a^i b).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import JoinUnionShape
from .linalg import BigPolynomial, SpectrumMultiset

CLASSES = ("central", "rotation", "reflection")


class DegenerateCaseWarning(UserWarning):
    pass


@dataclass(frozen=True)
class DetourPrediction:
    radius: int
    diameter: int
    ecc: dict[str, int]
    degree: dict[str, int]
    dds: dict[str, tuple[int, ...]]
    class_sizes: dict[str, int]

    @property
    def degree_sequence(self) -> tuple[int, ...]:
        seq = []
        for c in CLASSES:
            seq += [self.degree[c]] * self.class_sizes[c]
        return tuple(sorted(seq, reverse=True))

    @property
    def average_degree(self) -> Fraction:
        """Definitional D_av: sum of detour degrees over the vertex count."""
        total = sum(self.degree[c] * self.class_sizes[c] for c in CLASSES)
        return Fraction(total, sum(self.class_sizes.values()))


@dataclass(frozen=True)
class FormulaPrediction:
    n: int
    parity: str  # "even", "odd" or "degenerate"
    applicable: bool
    values: dict = field(default_factory=dict)
    skipped: dict[str, str] = field(default_factory=dict)
    notes: tuple[str, ...] = ()
    detour: DetourPrediction | None = None


def _parity(n: int) -> str:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n == 1:
        return "degenerate"
    return "even" if n % 2 == 0 else "odd"


def _zeros(k: int) -> tuple[int, ...]:
    return (0,) * k


def predict_detour_profile(n: int) -> DetourPrediction:
    parity = _parity(n)
    if parity == "degenerate":
        raise ValueError("detour formulas need n >= 2")
    if parity == "even":
        sizes = {"central": 2, "rotation": 4 * n - 2, "reflection": 4 * n}
        ecc = {"central": 4 * n + 1, "rotation": 4 * n + 3, "reflection": 4 * n + 3}
        deg = {"central": 8 * n - 2, "rotation": 4 * n, "reflection": 8 * n - 4}
        dds = {
            "central": (1,) + _zeros(4 * n - 2) + (1, 0, 8 * n - 2),
            "rotation": (1,) + _zeros(4 * n) + (4 * n - 1, 0, 4 * n),
            "reflection": (1,) + _zeros(4 * n) + (3, 0, 8 * n - 4),
        }
        rad, diam = 4 * n + 1, 4 * n + 3
    else:
        sizes = {"central": 4, "rotation": 4 * n - 4, "reflection": 4 * n}
        ecc = {"central": 4 * n + 11, "rotation": 4 * n + 15, "reflection": 4 * n + 15}
        deg = {"central": 8 * n - 4, "rotation": 4 * n, "reflection": 8 * n - 8}
        dds = {
            "central": (1,) + _zeros(4 * n + 6) + (3, 0, 0, 0, 8 * n - 4),
            "rotation": (1,) + _zeros(4 * n + 10) + (4 * n - 1, 0, 0, 0, 4 * n),
            "reflection": (1,) + _zeros(4 * n + 10) + (7, 0, 0, 0, 8 * n - 8),
        }
        rad, diam = 4 * n + 11, 4 * n + 15
    return DetourPrediction(rad, diam, ecc, deg, dds, sizes)


def printed_average_detour_degree(n: int) -> int:
    """The closed form printed for D_av; kept only to report how far it is off."""
    if n % 2 == 0:
        return 2**6 * n * (2 * n - 1) ** 2 * (4 * n - 1)
    return 2**10 * n * (n - 1) ** 2 * (2 * n - 1)


def predict_resolving_polynomial(n: int) -> BigPolynomial:
    parity = _parity(n)
    if parity == "degenerate":
        raise ValueError("the odd resolving-polynomial formula does not apply at n = 1")
    v = 8 * n
    coeffs = [0] * (v + 1)
    for i in range(v + 1):
        j = v - i
        if parity == "even":
            r = 2**j * (math.comb(2 * n + 1, j) + (2 * n - 1) * _comb(2 * n + 1, j - 1))
        else:
            r = 2 ** (2 * j) * (math.comb(n + 1, j) + (n - 1) * _comb(n + 1, j - 1))
        coeffs[i] = r
    return BigPolynomial(tuple(coeffs))


def _comb(a: int, b: int) -> int:
    return math.comb(a, b) if b >= 0 else 0


def _spectrum(n: int, parity: str) -> SpectrumMultiset:
    if parity == "even":
        return SpectrumMultiset.of({0: 1, 8 * n: 2, 4: 2 * n, 2: 2 * n, 4 * n: 4 * n - 3})
    return SpectrumMultiset.of({0: 1, 8 * n: 4, 4: n, 8: 3 * n, 4 * n: 4 * n - 5})


def _char_poly(n: int, parity: str) -> BigPolynomial:
    # expanded from the factorised form, independently of the spectrum table
    if parity == "even":
        roots = [(0, 1), (8 * n, 2), (4, 2 * n), (2, 2 * n), (4 * n, 4 * n - 3)]
    else:
        roots = [(0, 1), (8 * n, 4), (4, n), (8, 3 * n), (4 * n, 4 * n - 5)]
    return BigPolynomial.from_roots(roots)


def _complete_graph_prediction(n: int) -> FormulaPrediction:
    m = 8
    warnings.warn("SD_8 is abelian; predicting the complete graph K_8", DegenerateCaseWarning, stacklevel=3)
    values = {
        "vertex_count": m,
        "edge_count": m * (m - 1) // 2,
        "center_size": m,
        "shape": JoinUnionShape(m, ()),
        "omega": m,
        "alpha": 1,
        "alpha_prime": m // 2,
        "beta": m - 1,
        "beta_prime": m // 2,
        "kappa": m - 1,
        "kappa_prime": m - 1,
        "delta": m - 1,
        "dim": m - 1,
        "sdim": m - 1,
        "aut_order": math.factorial(m),
        "spectrum": SpectrumMultiset.of({0: 1, m: m - 1}),
        "char_poly": BigPolynomial.from_roots([(0, 1), (m, m - 1)]),
        "spanning_trees": m ** (m - 2),
        "resolving_polynomial": BigPolynomial(tuple([0] * (m - 1) + [m, 1])),
        "hamiltonian": True,
        "eulerian": False,
        "perfect": True,
        "closed": True,
        "eccentric_graph": True,
        "detour_radius": m - 1,
        "detour_diameter": m - 1,
        "detour_degree_sequence": (m - 1,) * m,
        "average_detour_degree": Fraction(m - 1),
    }
    skipped = {
        "odd_case_formulas": "n = 1 gives an abelian group; the odd-parity closed forms assume n >= 3",
        "interior_equals_center": "stated for non-abelian groups only",
        "detour_by_class": "no rotation/reflection split in a complete graph",
    }
    return FormulaPrediction(n, "degenerate", False, values, skipped,
                             ("n = 1: complete graph K_8 facts only",))


def predict(n: int) -> FormulaPrediction:
    """All closed-form values for Δ(SD_{8n})."""
    parity = _parity(n)
    if parity == "degenerate":
        return _complete_graph_prediction(n)
    even = parity == "even"
    v = 8 * n
    z = 2 if even else 4
    if even:
        shape = JoinUnionShape(2, (4 * n - 2,) + (2,) * (2 * n))
        aut = 2 * math.factorial(4 * n - 2) * 2 ** (2 * n) * math.factorial(2 * n)
        trees = 2 ** (14 * n - 3) * n ** (4 * n - 2)
    else:
        shape = JoinUnionShape(4, (4 * n - 4,) + (4,) * n)
        aut = 24 * math.factorial(4 * n - 4) * 24**n * math.factorial(n)
        trees = 2 ** (19 * n - 1) * n ** (4 * n - 2)
    detour = predict_detour_profile(n)
    alpha = 2 * n + 1 if even else n + 1
    delta = 3 if even else 7
    values = {
        "vertex_count": v,
        "edge_count": _edge_count(n, even),
        "center_size": z,
        "shape": shape,
        "omega": 4 * n,
        "alpha": alpha,
        "alpha_prime": 4 * n,
        "beta": 6 * n - 1 if even else 7 * n - 1,
        "beta_prime": 4 * n,
        "kappa": z,
        "kappa_prime": delta,
        "delta": delta,
        "dim": 6 * n - 2 if even else 7 * n - 2,
        "sdim": 8 * n - 2,
        "aut_order": aut,
        "spectrum": _spectrum(n, parity),
        "char_poly": _char_poly(n, parity),
        "spanning_trees": trees,
        "resolving_polynomial": predict_resolving_polynomial(n),
        "hamiltonian": n == 3,
        "eulerian": False,
        "perfect": True,
        "closed": True,
        "eccentric_graph": True,
        "interior_equals_center": True,
        "detour_radius": detour.radius,
        "detour_diameter": detour.diameter,
        "detour_ecc": dict(detour.ecc),
        "detour_degree": dict(detour.degree),
        "detour_dds": dict(detour.dds),
        "detour_degree_sequence": detour.degree_sequence,
        "average_detour_degree": detour.average_degree,
    }
    printed = printed_average_detour_degree(n)
    notes = []
    if Fraction(printed) != detour.average_degree:
        notes.append(
            f"D_av: printed closed form gives {printed}, "
            f"definitional value is {detour.average_degree}; the definitional value is used"
        )
    return FormulaPrediction(n, parity, True, values, {}, tuple(notes), detour)


def _edge_count(n: int, even: bool) -> int:
    """Half the degree sum of the neighbourhood lemmas."""
    if even:
        return (2 * (8 * n - 1) + (4 * n - 2) * (4 * n - 1) + 4 * n * 3) // 2
    return (4 * (8 * n - 1) + (4 * n - 4) * (4 * n - 1) + 4 * n * 7) // 2


def consistency_checks(pred: FormulaPrediction) -> dict[str, bool]:
    """Internal agreement between the separately stated formulas."""
    vals = pred.values
    v = vals["vertex_count"]
    spec: SpectrumMultiset = vals["spectrum"]
    out = {
        "multiplicities_sum_to_order": spec.dimension == v,
        "spectrum_matches_char_poly": spec.polynomial() == vals["char_poly"],
    }
    prod = 1
    for lam, mult in spec.pairs:
        if lam:
            prod *= lam**mult
    out["eigenvalue_product_gives_trees"] = prod == v * vals["spanning_trees"]
    rp: BigPolynomial = vals["resolving_polynomial"]
    out["resolving_top_coefficients"] = rp.coefficient(v) == 1 and rp.coefficient(v - 1) == v
    out["resolving_total_at_most_subsets"] = sum(rp.coefficients) <= 2**v
    out["resolving_lowest_is_dim"] = min(i for i, c in enumerate(rp.coefficients) if c) == vals["dim"]
    out["gallai_vertex"] = vals["alpha"] + vals["beta"] == v
    out["gallai_edge"] = vals["alpha_prime"] + vals["beta_prime"] == v
    out["aut_matches_shape"] = vals["shape"].automorphism_order() == vals["aut_order"]
    out["shape_vertex_count"] = vals["shape"].vertex_count == v
    det = pred.detour
    if det is not None:
        out["dds_rows_sum_to_order"] = all(sum(row) == v for row in det.dds.values())
        out["dds_row_lengths"] = all(len(det.dds[c]) == det.ecc[c] + 1 for c in CLASSES)
        out["dds_last_is_degree"] = all(det.dds[c][-1] == det.degree[c] for c in CLASSES)
        out["degree_sum_matches_average"] = sum(det.degree_sequence) == det.average_degree * v
    return out
