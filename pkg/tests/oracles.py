"""Slow, obviously-correct reference implementations used only by the tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from hypothesis import strategies as st

from snrd.graph import FuzzyGraph, build


def conn_by_paths(G: FuzzyGraph, u: str, v: str) -> Fraction:
    """Max over all simple u-v paths of the weakest edge."""
    best = Fraction(0)

    def walk(x, seen, weakest):
        nonlocal best
        if x == v:
            best = max(best, weakest)
            return
        for y in G.neighbors(x):
            if y not in seen:
                walk(y, seen | {y}, min(weakest, G.mu(x, y)))

    walk(u, {u}, Fraction(2))
    return best


def strong_edges_by_paths(G: FuzzyGraph) -> set[frozenset]:
    return {frozenset((u, v)) for u, v, m in G.edges() if m == conn_by_paths(G, u, v)}


def strong_nbrs(G: FuzzyGraph) -> dict[str, set[str]]:
    ns = {v: set() for v in G}
    for e in strong_edges_by_paths(G):
        a, b = tuple(e)
        ns[a].add(b)
        ns[b].add(a)
    return ns


def mu_s_naive(G: FuzzyGraph) -> dict[str, Fraction]:
    ns = strong_nbrs(G)
    return {v: min((G.mu(v, u) for u in ns[v]), default=Fraction(0)) for v in G}


def dominates(ns, verts, D) -> bool:
    return all(v in D or ns[v] & D for v in verts)


def gamma_s_naive(G: FuzzyGraph) -> Fraction:
    ns, ms, verts = strong_nbrs(G), mu_s_naive(G), list(G)
    return min(
        sum((ms[v] for v in D), Fraction(0))
        for r in range(len(verts) + 1)
        for D in map(set, combinations(verts, r))
        if dominates(ns, verts, D)
    )


def gamma_snr_naive(G: FuzzyGraph) -> Fraction:
    ns, ms, verts = strong_nbrs(G), mu_s_naive(G), list(G)
    best = None
    for labs in product((0, 1, 2), repeat=len(verts)):
        f = dict(zip(verts, labs))
        if all(f[v] != 0 or any(f[u] == 2 for u in ns[v]) for v in verts):
            w = sum((f[v] * ms[v] for v in verts), Fraction(0))
            best = w if best is None else min(best, w)
    return best


def minimal_by_definition(G: FuzzyGraph, D: set) -> bool:
    ns, verts = strong_nbrs(G), list(G)
    return not any(dominates(ns, verts, D - {u}) for u in D)


@st.composite
def fuzzy_graphs(draw, min_n: int = 1, max_n: int = 6, grid: int = 10) -> FuzzyGraph:
    n = draw(st.integers(min_n, max_n))
    ids = [f"v{i}" for i in range(n)]
    sig = [draw(st.integers(1, grid)) for _ in ids]
    edges = []
    for i, j in combinations(range(n), 2):
        if draw(st.booleans()):
            k = draw(st.integers(1, min(sig[i], sig[j])))
            edges.append((ids[i], ids[j], Fraction(k, grid)))
    return build([(v, Fraction(s, grid)) for v, s in zip(ids, sig)], edges)
