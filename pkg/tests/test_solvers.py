from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from oracles import fuzzy_graphs, gamma_s_naive, gamma_snr_naive, minimal_by_definition
from snrd import fixtures as F
from snrd.connectivity import strong_profile
from snrd.errors import InvalidLabeling, NotDominating, TooLarge, UnknownVertex
from snrd.graph import build
from snrd.solvers import (
    Labeling,
    brute_limit,
    dominating_weight,
    gamma_s,
    gamma_snr,
    gamma_snr_bruteforce,
    is_minimal_strong_dominating,
    is_strong_dominating,
    solve_snr,
    swap_partition,
    validate_snrdf,
)

R = Fraction


def prof(G):
    return G, strong_profile(G)


def test_is_strong_dominating():
    G, P = prof(F.tri_b())
    assert is_strong_dominating(G, P, {"b"})
    assert not is_strong_dominating(G, P, {"a"})
    E, PE = prof(F.empty3())
    assert is_strong_dominating(E, PE, set(E.vertices))
    assert not is_strong_dominating(E, PE, {"a", "b"})
    with pytest.raises(UnknownVertex):
        is_strong_dominating(G, P, {"zz"})


def test_dominating_weight():
    G, P = prof(F.tri_b())
    assert dominating_weight(G, P, {"b"}) == R(3, 10)
    E, PE = prof(F.empty3())
    assert dominating_weight(E, PE, E.vertices) == 0
    S, PS = prof(F.star())
    assert dominating_weight(S, PS, {"c"}) == R(2, 10)


def test_minimality():
    G, P = prof(F.tri_b())
    assert is_minimal_strong_dominating(G, P, {"b"})
    assert not is_minimal_strong_dominating(G, P, {"a", "b"})
    E, PE = prof(F.empty3())
    assert is_minimal_strong_dominating(E, PE, set(E.vertices))
    with pytest.raises(NotDominating):
        is_minimal_strong_dominating(G, P, {"a"})


def test_gamma_s_examples():
    G, P = prof(F.tri_b())
    res = gamma_s(G, P)
    assert res.value == R(3, 10) and res.witness == {"b"}
    E, PE = prof(F.empty3())
    res = gamma_s(E, PE)
    assert res.value == 0 and res.witness == set(E.vertices)
    S, PS = prof(F.star())
    res = gamma_s(S, PS)
    assert res.value == R(2, 10) and res.witness == {"c"}


def test_gamma_s_lexicographic_witness():
    # two optimal singletons; the earlier vertex wins
    G, P = prof(build([("a", 1), ("b", 1)], [("a", "b", "0.4")]))
    assert gamma_s(G, P).witness == {"a"}


def test_validate_snrdf():
    G, P = prof(F.c6())
    f = {"u1": 2, "u2": 0, "u3": 1, "u4": 0, "u5": 2, "u6": 0}
    assert validate_snrdf(G, P, f)
    assert Labeling.of(P, f).weight == R(34, 100)
    T, PT = prof(F.tri_b())
    assert not validate_snrdf(T, PT, dict.fromkeys(T.vertices, 0))
    E, PE = prof(F.empty3())
    assert validate_snrdf(E, PE, dict.fromkeys(E.vertices, 1))


def test_labeling_validation_errors():
    G, P = prof(F.edge())
    with pytest.raises(InvalidLabeling):
        Labeling.of(P, {"u": 1})
    with pytest.raises(InvalidLabeling):
        Labeling.of(P, {"u": 1, "v": 3})
    with pytest.raises(UnknownVertex):
        validate_snrdf(G, P, {"u": 1, "v": 1, "w": 0})


def test_partition():
    G, P = prof(F.c6())
    f = Labeling.of(P, {"u1": 2, "u2": 0, "u3": 1, "u4": 0, "u5": 2, "u6": 0})
    assert f.partition == ({"u2", "u4", "u6"}, {"u3"}, {"u1", "u5"})
    assert f.as_tuple() == (2, 0, 1, 0, 2, 0)


def test_bruteforce_examples():
    G, P = prof(F.c6())
    assert gamma_snr_bruteforce(G, P).value == R(34, 100)
    S, PS = prof(F.star())
    assert gamma_snr_bruteforce(S, PS).value == R(4, 10)
    E, PE = prof(F.empty3())
    res = gamma_snr_bruteforce(E, PE)
    assert res.value == 0 and set(res.witness.labels.values()) == {1}
    assert res.method == "bruteforce" and res.nodes_explored == 27


def test_branch_and_bound_examples():
    G, P = prof(F.c6())
    res = gamma_snr(G, P)
    assert res.value == R(34, 100) and res.method == "branch_and_bound"
    assert res.witness.labels == gamma_snr_bruteforce(G, P).witness.labels
    K, PK = prof(F.k23())
    assert gamma_snr(K, PK).value == R(4, 10)


def test_brute_limit(monkeypatch):
    G, P = prof(F.c6())
    with pytest.raises(TooLarge):
        gamma_snr_bruteforce(G, P, limit=5)
    monkeypatch.setenv("SNRD_BRUTE_LIMIT", "4")
    assert brute_limit() == 4
    with pytest.raises(TooLarge):
        solve_snr(G, P, brute=True)
    assert solve_snr(G, P).value == R(34, 100)


def test_swap_partition():
    G, P = prof(F.edge())
    ones = Labeling.of(P, {"u": 1, "v": 1})
    assert swap_partition(ones).labels == ones.labels
    f = Labeling.of(P, {"u": 2, "v": 0})
    assert swap_partition(f).labels == {"u": 0, "v": 2}
    C, PC = prof(F.c6())
    opt = gamma_snr(C, PC).witness
    assert validate_snrdf(C, PC, swap_partition(opt))


def _structure_ok(G, P, f):
    V0, V1, V2 = f.partition
    ns, ms = P.ns, P.mu_s
    assert all(ms[u] == ms[v] for u in V1 for v in ns[u] & V1)
    assert not any(ns[u] & V2 for u in V1)
    assert all(ns[u] & V0 for u in V2)
    assert len(V2) <= len(V0)
    assert validate_snrdf(G, P, swap_partition(f))


@settings(max_examples=150, deadline=None)
@given(fuzzy_graphs(max_n=6))
def test_solvers_match_naive_oracle(G):
    P = strong_profile(G)
    want = gamma_snr_naive(G)
    bb, bf = gamma_snr(G, P), gamma_snr_bruteforce(G, P)
    assert bb.value == bf.value == want
    assert bb.witness.labels == bf.witness.labels
    assert validate_snrdf(G, P, bb.witness) and bb.witness.weight == want
    assert gamma_s(G, P).value == gamma_s_naive(G)


@settings(max_examples=150, deadline=None)
@given(fuzzy_graphs(max_n=7))
def test_sandwich_and_edgeless_iff(G):
    P = strong_profile(G)
    gs, g = gamma_s(G, P).value, gamma_snr(G, P).value
    assert gs <= g <= 2 * gs
    assert (gs == g) == (G.n_edges == 0)


@settings(max_examples=150, deadline=None)
@given(fuzzy_graphs(max_n=7, grid=4))
def test_canonical_witness_structure(G):
    # coarse grid: many ties between optima
    P = strong_profile(G)
    _structure_ok(G, P, gamma_snr(G, P).witness)


@settings(max_examples=100, deadline=None)
@given(fuzzy_graphs(max_n=6))
def test_minimality_matches_definition(G):
    P = strong_profile(G)
    verts = G.vertices
    for r in range(len(verts) + 1):
        for D in map(set, combinations(verts, r)):
            if is_strong_dominating(G, P, D):
                assert is_minimal_strong_dominating(G, P, D) == minimal_by_definition(G, D)
