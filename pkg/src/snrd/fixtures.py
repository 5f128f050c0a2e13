"""Small named instances used by tests, the CLI and the README.

Vertex memberships not forced by the intended edge weights are free
choices subject to ``mu <= min(sigma)``; every reported value on these
graphs depends only on the edge memberships.
"""

from __future__ import annotations

from .graph import FuzzyGraph, build


def empty3() -> FuzzyGraph:
    return build([("a", "0.5"), ("b", "0.5"), ("c", "0.5")])


def edge() -> FuzzyGraph:
    return build([("u", "0.3"), ("v", "0.3")], [("u", "v", "0.3")])


def tri_a() -> FuzzyGraph:
    return build(
        [("a", 1), ("b", 1), ("c", 1)],
        [("a", "b", "0.5"), ("b", "c", "0.3"), ("a", "c", "0.3")],
    )


def tri_b() -> FuzzyGraph:
    return build(
        [("a", 1), ("b", 1), ("c", 1)],
        [("a", "b", "0.5"), ("b", "c", "0.3"), ("a", "c", "0.2")],
    )


def star() -> FuzzyGraph:
    """Star whose Roman number meets the strong-neighbourhood upper bound."""
    return build(
        [("c", "0.2"), ("l1", "0.4"), ("l2", "0.3"), ("l3", "0.4"), ("l4", "0.4")],
        [("c", leaf, "0.2") for leaf in ("l1", "l2", "l3", "l4")],
    )


def k23() -> FuzzyGraph:
    """Complete bipartite graph where two 2-labels beat the 2+1 strategy (weight 0.4)."""
    sig = {"x1": "0.1", "x2": "0.3", "y1": "0.3", "y2": "0.3", "y3": "0.3"}
    edges = []
    for x in ("x1", "x2"):
        for y in ("y1", "y2", "y3"):
            edges.append((x, y, min(sig[x], sig[y], key=float)))
    return build(list(sig.items()), edges)


def c6() -> FuzzyGraph:
    """Strong 6-cycle whose optimum (0.34) beats every periodic pattern (0.62)."""
    ids = [f"u{i}" for i in range(1, 7)]
    mus = ["0.3", "0.3", "0.3", "0.3", "0.01", "0.01"]
    return build(
        [(v, "0.5") for v in ids],
        [(ids[i], ids[(i + 1) % 6], mus[i]) for i in range(6)],
    )


def match() -> FuzzyGraph:
    """Two disjoint effective edges with equal endpoint sigma plus an isolated vertex."""
    return build(
        [("a1", "0.3"), ("a2", "0.3"), ("b1", "0.5"), ("b2", "0.5"), ("z", "0.2")],
        [("a1", "a2", "0.3"), ("b1", "b2", "0.5")],
    )


def matching_only() -> FuzzyGraph:
    """``match()`` without its isolated vertex; its Roman number equals its order."""
    return build(
        [("a1", "0.3"), ("a2", "0.3"), ("b1", "0.5"), ("b2", "0.5")],
        [("a1", "a2", "0.3"), ("b1", "b2", "0.5")],
    )


def p3() -> FuzzyGraph:
    return build([("u1", 1), ("u2", 1), ("u3", 1)], [("u1", "u2", "0.4"), ("u2", "u3", "0.2")])


def p6() -> FuzzyGraph:
    ids = [f"u{i}" for i in range(1, 7)]
    mus = ["0.3", "0.2", "0.2", "0.2", "0.4"]
    return build([(v, 1) for v in ids], [(ids[i], ids[i + 1], mus[i]) for i in range(5)])


FIXTURES = {
    "empty3": empty3,
    "edge": edge,
    "tri_a": tri_a,
    "tri_b": tri_b,
    "star": star,
    "k23": k23,
    "c6": c6,
    "match": match,
    "matching_only": matching_only,
    "p3": p3,
    "p6": p6,
}
