from fractions import Fraction

from hypothesis import given, settings

from oracles import fuzzy_graphs
from snrd import fixtures as F
from snrd.audit import (
    FAIL,
    NA,
    PASS,
    audit_bounds,
    audit_instance,
    audit_optimum_structure,
    is_effective_perfect_matching,
)
from snrd.connectivity import strong_profile
from snrd.graph import order, size
from snrd.solvers import Labeling, SolveResult, gamma_s, gamma_snr

R = Fraction


def test_star_reaches_upper_bound():
    rep = audit_instance(F.star())
    assert rep.verdict == PASS
    up = rep.get("neighborhood_upper")
    assert up.status == PASS and up.lhs == up.rhs == "0.4"
    assert rep.get("universal_value").status == PASS


def test_match_size_equality_not_order_equality():
    G = F.match()
    rep = audit_instance(G)
    assert rep.verdict == PASS
    g = gamma_snr(G, strong_profile(G)).value
    assert g == R(16, 10) == 2 * size(G)
    assert order(G) == R(18, 10) and g < order(G)
    assert rep.get("size_equality_iff").lhs == "true"
    assert rep.get("order_equality_iff").lhs == "false"
    assert not is_effective_perfect_matching(G)


def test_matching_only_reaches_order():
    G = F.matching_only()
    rep = audit_instance(G)
    assert rep.verdict == PASS
    assert is_effective_perfect_matching(G)
    assert rep.get("order_equality_iff").lhs == "true"


def test_empty_graph():
    rep = audit_instance(F.empty3())
    assert rep.verdict == PASS
    c = rep.get("edgeless_iff_equal")
    assert c.status == PASS and c.lhs == c.rhs == "true"
    assert rep.get("nordhaus_gaddum_lower").status == NA
    assert rep.get("strong_edge_exists").status == NA


def test_structure_c6_and_tri_b():
    G = F.c6()
    P = strong_profile(G)
    res = gamma_snr(G, P)
    assert res.witness.labels == {"u1": 2, "u2": 0, "u3": 1, "u4": 0, "u5": 2, "u6": 0}
    assert audit_optimum_structure(G, P, res).verdict == PASS
    T = F.tri_b()
    PT = strong_profile(T)
    rep = audit_optimum_structure(T, PT, gamma_snr(T, PT))
    assert rep.verdict == PASS
    for cid in ("v2_min_dominating", "v2_min_dominating_induced"):
        assert rep.get(cid).lhs == rep.get(cid).rhs == "0.3"


def test_check_ids_unique():
    rep = audit_instance(F.k23())
    ids = [c.id for c in rep.checks]
    assert len(ids) == len(set(ids))


def test_wrong_value_is_caught():
    G = F.star()
    P = strong_profile(G)
    gs = gamma_s(G, P)
    lab = Labeling.of(P, dict.fromkeys(G.vertices, 1))
    bogus = SolveResult(R(1, 10), lab, 0, "branch_and_bound")
    rep = audit_bounds(G, P, gs, bogus)
    assert rep.verdict == FAIL
    assert rep.get("sandwich_lower").status == FAIL
    assert rep.get("solver_agreement").status == FAIL
    assert audit_optimum_structure(G, P, bogus).get("witness_valid").status == FAIL


def test_nordhaus_gaddum_reported():
    rep = audit_instance(F.tri_b())
    lo, hi = rep.get("nordhaus_gaddum_lower"), rep.get("nordhaus_gaddum_upper")
    assert lo.status == hi.status == PASS
    assert hi.rhs == "6"


@settings(max_examples=120, deadline=None)
@given(fuzzy_graphs(max_n=7, grid=5))
def test_audit_passes_on_random_graphs(G):
    rep = audit_instance(G)
    assert rep.verdict == PASS, [c for c in rep.checks if c.failed]
