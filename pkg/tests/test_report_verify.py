import json
from fractions import Fraction

from sdgraph.graphs import SimpleGraph, commuting_graph
from sdgraph.groups import cyclic_group, frobenius_21, sd8n_construct, standard_corpus, symmetric_group
from sdgraph.laws import check_laws
from sdgraph.linalg import BigPolynomial
from sdgraph.report import BUDGET_EXCEEDED, EXACT, compute_report, dumps, sd_vertex_classes, to_jsonable
from sdgraph.verify import MATCH, MISMATCH, SKIPPED, RunConfig, verify_n


def test_json_encoding():
    assert to_jsonable(Fraction(43, 4)) == {"num": "43", "den": "4"}
    assert to_jsonable(2**70, "spanning_trees") == str(2**70)
    assert to_jsonable(BigPolynomial((0, -2, 1))) == ["0", "-2", "1"]
    assert dumps({"b": 1, "a": 2}) == '{"a":2,"b":1}'


def test_report_sd16(sd):
    g, G = sd(2)
    r = compute_report(G, g, classes=sd_vertex_classes(g))
    assert all(e.status == EXACT for e in r.entries.values())
    assert r.gallai_holds() and r.connectivity_chain_holds()
    assert r.value("spanning_trees") == 2**31
    doc = json.loads(dumps(r.to_json()))
    assert doc["invariants"]["spanning_trees"]["value"] == "2147483648"
    assert r.value("detour_ecc") == {"central": 9, "rotation": 11, "reflection": 11}


def test_report_without_classes_marks_per_class_fields(sd):
    g, G = sd(2)
    r = compute_report(G, g, invariants=("detour_ecc", "detour_radius"))
    assert r.entries["detour_ecc"].status == "not_applicable"
    assert r.value("detour_radius") == 9


def test_report_on_plain_graph():
    r = compute_report(SimpleGraph.path(4))
    assert r.entries["center_size"].status == "not_applicable"
    assert r.entries["spectrum"].status == "not_applicable"  # P_4 has irrational eigenvalues
    assert r.value("detour_diameter") == 3


def test_report_disconnected():
    r = compute_report(SimpleGraph.empty(3), invariants=("dim", "kappa", "omega"))
    assert not r.connected
    assert r.entries["dim"].status == "not_applicable"
    assert r.value("kappa") == 0


def test_budget_exceeded_is_flagged():
    import networkx as nx

    h = nx.random_regular_graph(3, 36, seed=3)
    G = SimpleGraph.from_edges(36, h.edges())
    r = compute_report(G, budget=1e-6, invariants=("detour_radius", "detour_diameter", "vertex_count"))
    assert r.entries["detour_radius"].status == BUDGET_EXCEEDED
    assert r.entries["detour_diameter"].status == BUDGET_EXCEEDED
    assert r.value("vertex_count") == 36


def test_verify_n2_record():
    rec = verify_n(2, RunConfig(timing=False))
    verdicts = {k: f.verdict for k, f in rec.fields.items()}
    assert verdicts["dim"] == MATCH and verdicts["resolving_polynomial"] == MATCH
    assert verdicts["average_detour_degree"] == MATCH
    assert any("printed" in n for n in rec.notes)
    # Int(Γ) is empty when |Z| > 1, so the stated equality is not reproduced
    assert verdicts["interior_equals_center"] == MISMATCH
    assert rec.first_mismatch == "interior_equals_center"


def test_verify_n1_skips_odd_formulas():
    rec = verify_n(1, RunConfig(timing=False))
    assert rec.fields["odd_case_formulas"].verdict == SKIPPED
    assert rec.fields["dim"].verdict == MATCH and rec.fields["alpha"].verdict == MATCH
    assert rec.ok


def test_record_lists_each_invariant_once():
    rec = verify_n(2, RunConfig(timing=False, invariants=("dim", "omega")))
    assert set(rec.fields) == {"dim", "omega"}


def test_record_is_deterministic():
    a = dumps(verify_n(2, RunConfig(timing=False)).to_json(False))
    b = dumps(verify_n(2, RunConfig(timing=False)).to_json(False))
    assert a == b


def test_laws_on_corpus():
    for name, g in standard_corpus().items():
        for law in check_laws(g):
            if law.name == "interior_center_iff":
                continue
            assert law.holds is not False, (name, law)


def test_interior_center_iff_counterexamples():
    # S_3 has Int = Cen although |C_G(b)| = 2; SD_16 satisfies the predicate but Int is empty
    laws = {c.name: c for c in check_laws(symmetric_group(3))}
    assert laws["interior_center_iff"].computed is True and laws["interior_center_iff"].expected is False
    laws = {c.name: c for c in check_laws(sd8n_construct(2))}
    assert laws["interior_center_iff"].computed is False and laws["interior_center_iff"].expected is True
    laws = {c.name: c for c in check_laws(frobenius_21())}
    assert laws["interior_center_iff"].holds


def test_abelian_laws():
    laws = {c.name: c for c in check_laws(cyclic_group(6))}
    assert laws["edge_connectivity"].computed == 5
    assert laws["vertex_connectivity"].holds is None
