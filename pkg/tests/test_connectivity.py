from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import conn_by_paths, fuzzy_graphs, strong_edges_by_paths
from snrd import fixtures as F
from snrd.connectivity import (
    cycle_order,
    has_two_minimum_edges,
    is_strong_fuzzy_cycle,
    min_positive_membership,
    path_strength,
    strength_of_connectedness,
    strong_profile,
    to_dot,
)
from snrd.errors import NotACycle, NotAPath, SameVertex, UnknownVertex
from snrd.families import make_cycle
from snrd.graph import build, size

R = Fraction


def test_conn_examples():
    assert strength_of_connectedness(F.tri_b(), "a", "c") == R(3, 10)
    assert strength_of_connectedness(F.empty3(), "a", "b") == 0
    assert strength_of_connectedness(F.edge(), "u", "v") == R(3, 10)


def test_conn_errors():
    with pytest.raises(SameVertex):
        strength_of_connectedness(F.edge(), "u", "u")
    with pytest.raises(UnknownVertex):
        strength_of_connectedness(F.edge(), "u", "w")


def test_path_strength():
    assert path_strength(F.tri_b(), ["a", "b", "c"]) == R(3, 10)
    assert path_strength(F.tri_b(), ["a", "c"]) == R(2, 10)
    assert path_strength(F.c6(), ["u1", "u2", "u3", "u4"]) == R(3, 10)
    with pytest.raises(NotAPath):
        path_strength(F.c6(), ["u1", "u3"])
    with pytest.raises(NotAPath):
        path_strength(F.c6(), ["u1"])


def test_profile_tri_b():
    P = strong_profile(F.tri_b())
    assert P.sorted_strong_edges() == [("a", "b"), ("b", "c")]
    assert P.ns["b"] == {"a", "c"}
    assert P.mu_s == {"a": R(1, 2), "b": R(3, 10), "c": R(3, 10)}
    assert P.universal == {"b"}
    assert not P.is_strong("a", "c") and P.conn_of("c", "a") == R(3, 10)


def test_profile_star():
    P = strong_profile(F.star())
    assert len(P.strong_edges) == 4
    assert P.universal == {"c"}
    assert P.mu_s["c"] == R(2, 10)
    assert P.d_sn["c"] == R(15, 10)
    assert P.strong_neighbors("c") == ("l1", "l2", "l3", "l4")


def test_profile_empty():
    P = strong_profile(F.empty3())
    assert not P.strong_edges
    assert set(P.mu_s.values()) == {0}
    assert not P.universal
    assert P.mu_min is None and P.mu_max is None
    assert min_positive_membership(F.empty3()) is None


def test_strong_cycle_examples():
    assert is_strong_fuzzy_cycle(F.tri_a())
    assert not is_strong_fuzzy_cycle(F.tri_b())
    assert is_strong_fuzzy_cycle(F.c6())
    with pytest.raises(NotACycle):
        is_strong_fuzzy_cycle(F.star())


def test_cycle_order_rejects_two_triangles():
    ids = [(v, 1) for v in "abcdef"]
    two = build(ids, [(a, b, 1) for a, b in ("ab", "bc", "ac", "de", "ef", "df")])
    with pytest.raises(NotACycle):
        cycle_order(two)


def test_dot_export_c6():
    dot = to_dot(F.c6())
    assert dot.count("style=solid") == 6 and "dashed" not in dot
    assert '"u1" [label="u1 (0.5)"]' in dot
    tri = to_dot(F.tri_b())
    assert tri.count("style=dashed") == 1 and 'label="0.2", style=dashed' in tri


@settings(max_examples=200, deadline=None)
@given(fuzzy_graphs(max_n=7))
def test_conn_matches_all_paths(G):
    P = strong_profile(G)
    for u, v in combinations(G.vertices, 2):
        assert P.conn[(u, v)] == conn_by_paths(G, u, v)
    assert {frozenset(e) for e in P.strong_edges} == strong_edges_by_paths(G)


@settings(max_examples=200, deadline=None)
@given(fuzzy_graphs(max_n=7))
def test_profile_invariants(G):
    P = strong_profile(G)
    for u, v, m in G.edges():
        assert m <= P.conn_of(u, v)
    for u in G:
        assert all(u in P.ns[v] for v in P.ns[u])
        assert (P.mu_s[u] == 0) == (not P.ns[u])
        assert P.delta_s <= P.d_s[u] <= P.Delta_s
        assert P.delta_sn <= P.d_sn[u] <= P.Delta_sn
        assert (u in P.universal) == (P.ns[u] | {u} == set(G.vertices))
    if size(G) > 0:
        heaviest = max(m for _, _, m in G.edges())
        assert P.strong_edges
        assert all(P.is_strong(u, v) for u, v, m in G.edges() if m == heaviest)
        assert all(P.mu_min <= G.mu(u, v) <= P.mu_max for u, v in P.strong_edges)


@settings(max_examples=100, deadline=None)
@given(fuzzy_graphs(max_n=7))
def test_bridges_are_strong(G):
    P = strong_profile(G)
    for u, v, _ in G.edges():
        rest = [(a, b, m) for a, b, m in G.edges() if {a, b} != {u, v}]
        H = build(G.sigma_items(), rest)
        if conn_by_paths(H, u, v) == 0:
            assert P.is_strong(u, v)


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 8).flatmap(lambda n: st.lists(st.integers(1, 4), min_size=n, max_size=n)))
def test_strong_cycle_criterion(ks):
    C = make_cycle([1] * len(ks), [R(k, 4) for k in ks])
    assert is_strong_fuzzy_cycle(C) == has_two_minimum_edges([R(k, 4) for k in ks])
