"""Strength of connectedness, strong edges and the per-graph strong profile."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Optional, Sequence

from .errors import NotACycle, NotAPath, SameVertex
from .graph import ZERO, FuzzyGraph, format_rational


def conn_matrix(G: FuzzyGraph) -> list[list[Fraction]]:
    """All-pairs strength of connectedness by max-min transitive closure.

    Same triple loop as Floyd-Warshall over the (max, min) semiring. Walks never
    beat simple paths under this semiring, so the result is the maximum over
    simple paths. The diagonal is left at 0.
    """
    verts = G.vertices
    n = len(verts)
    c = [[G.mu(verts[i], verts[j]) if i != j else ZERO for j in range(n)] for i in range(n)]
    for k in range(n):
        ck = c[k]
        for i in range(n):
            cik = c[i][k]
            if cik == 0 or i == k:
                continue
            ci = c[i]
            for j in range(n):
                if j == i or j == k:
                    continue
                via = ck[j] if ck[j] < cik else cik
                if via > ci[j]:
                    ci[j] = via
    return c


def strength_of_connectedness(G: FuzzyGraph, u: str, v: str) -> Fraction:
    iu, iv = G.index(u), G.index(v)
    if iu == iv:
        raise SameVertex(f"strength of connectedness needs two distinct vertices, got {u!r} twice")
    return conn_matrix(G)[iu][iv]


def path_strength(G: FuzzyGraph, path: Sequence[str]) -> Fraction:
    """Weakest edge membership along ``path``."""
    if len(path) < 2:
        raise NotAPath("a path needs at least one edge")
    weakest = None
    for a, b in zip(path, path[1:]):
        m = G.mu(a, b)
        if m == 0:
            raise NotAPath(f"{a!r} and {b!r} are not adjacent")
        weakest = m if weakest is None else min(weakest, m)
    return weakest


@dataclass(frozen=True)
class StrongProfile:
    """Everything downstream code needs to know about strong edges of one graph.

    ``mu_s[u]`` is 0 for vertices without strong neighbours. The extrema
    ``mu_min``/``mu_max`` range over strong edges only and are ``None`` when
    there is none.
    """

    graph: FuzzyGraph
    conn: Mapping[tuple[str, str], Fraction]
    strong_edges: frozenset[tuple[str, str]]
    ns: Mapping[str, frozenset[str]]
    mu_s: Mapping[str, Fraction]
    d: Mapping[str, Fraction]
    d_s: Mapping[str, Fraction]
    d_sn: Mapping[str, Fraction]
    delta_s: Fraction
    Delta_s: Fraction
    delta_sn: Fraction
    Delta_sn: Fraction
    mu_min: Optional[Fraction]
    mu_max: Optional[Fraction]
    universal: frozenset[str]

    def conn_of(self, u: str, v: str) -> Fraction:
        return self.conn[self.graph.edge_key(u, v)]

    def is_strong(self, u: str, v: str) -> bool:
        return self.graph.edge_key(u, v) in self.strong_edges

    def strong_neighbors(self, u: str) -> tuple[str, ...]:
        """``N_s(u)`` in vertex order."""
        return tuple(v for v in self.graph.neighbors(u) if v in self.ns[u])

    def sorted_strong_edges(self) -> list[tuple[str, str]]:
        idx = self.graph.index
        return sorted(self.strong_edges, key=lambda e: (idx(e[0]), idx(e[1])))


def strong_profile(G: FuzzyGraph) -> StrongProfile:
    verts = G.vertices
    c = conn_matrix(G)
    conn = {}
    for i, j in combinations(range(len(verts)), 2):
        conn[(verts[i], verts[j])] = c[i][j]

    strong = frozenset((u, v) for u, v, m in G.edges() if m == conn[(u, v)])
    ns: dict[str, set[str]] = {v: set() for v in verts}
    for u, v in strong:
        ns[u].add(v)
        ns[v].add(u)

    mu_s = {}
    d, d_s, d_sn = {}, {}, {}
    for u in verts:
        ms = [G.mu(u, v) for v in ns[u]]
        mu_s[u] = min(ms) if ms else ZERO
        d[u] = sum((G.mu(u, v) for v in G.neighbors(u)), ZERO)
        d_s[u] = sum(ms, ZERO)
        d_sn[u] = sum((G.sigma(v) for v in ns[u]), ZERO)

    strong_mus = [G.mu(u, v) for u, v in strong]
    n = len(verts)
    return StrongProfile(
        graph=G,
        conn=conn,
        strong_edges=strong,
        ns={v: frozenset(s) for v, s in ns.items()},
        mu_s=mu_s,
        d=d,
        d_s=d_s,
        d_sn=d_sn,
        delta_s=min(d_s.values()),
        Delta_s=max(d_s.values()),
        delta_sn=min(d_sn.values()),
        Delta_sn=max(d_sn.values()),
        mu_min=min(strong_mus) if strong_mus else None,
        mu_max=max(strong_mus) if strong_mus else None,
        universal=frozenset(u for u in verts if len(ns[u]) == n - 1),
    )


def min_positive_membership(G: FuzzyGraph) -> Optional[Fraction]:
    """Smallest edge membership over all edges (strong or not); ``None`` if edgeless."""
    mus = [m for _, _, m in G.edges()]
    return min(mus) if mus else None


def cycle_order(G: FuzzyGraph) -> list[str]:
    """Vertex sequence of a graph whose underlying graph is one cycle.

    Starts at the first vertex and steps to its earlier-listed neighbour, so
    graphs made by listing ``u1..un`` come back as ``u1..un``.
    """
    n = len(G)
    if n < 3 or G.n_edges != n or any(len(G.neighbors(v)) != 2 for v in G):
        raise NotACycle("underlying graph is not a single cycle")
    start = G.vertices[0]
    seq = [start]
    prev, cur = start, G.neighbors(start)[0]
    while cur != start:
        seq.append(cur)
        a, b = G.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
    if len(seq) != n:
        raise NotACycle("underlying graph is a union of several cycles")
    return seq


def path_order(G: FuzzyGraph) -> list[str]:
    """Vertex sequence of a graph whose underlying graph is one path, from the earlier-listed end."""
    n = len(G)
    degs = {v: len(G.neighbors(v)) for v in G}
    ends = [v for v in G if degs[v] == 1]
    if n < 2 or G.n_edges != n - 1 or len(ends) != 2 or any(d > 2 for d in degs.values()):
        raise NotAPath("underlying graph is not a single path")
    seq = [ends[0]]
    prev = None
    cur = ends[0]
    while True:
        nxt = [w for w in G.neighbors(cur) if w != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        seq.append(cur)
    if len(seq) != n:
        raise NotAPath("underlying graph is not connected")
    return seq


def cycle_edge_weights(G: FuzzyGraph, seq: Sequence[str]) -> list[Fraction]:
    """``[mu(u1,u2), mu(u2,u3), ..., mu(un,u1)]`` for a vertex sequence."""
    n = len(seq)
    return [G.mu(seq[i], seq[(i + 1) % n]) for i in range(n)]


def has_two_minimum_edges(weights: Sequence[Fraction]) -> bool:
    lo = min(weights)
    return sum(1 for w in weights if w == lo) >= 2


def is_strong_fuzzy_cycle(C: FuzzyGraph, profile: Optional[StrongProfile] = None) -> bool:
    """True iff every edge of the cycle is strong."""
    cycle_order(C)
    profile = profile or strong_profile(C)
    return len(profile.strong_edges) == C.n_edges


def to_dot(G: FuzzyGraph, profile: Optional[StrongProfile] = None, name: str = "G") -> str:
    """Graphviz source: strong edges solid, the rest dashed, labels carry memberships."""
    profile = profile or strong_profile(G)
    lines = [f"graph {_dot_id(name)} {{"]
    for v, s in G.sigma_items():
        lines.append(f'  {_dot_id(v)} [label="{_dot_escape(v)} ({format_rational(s)})"];')
    for u, v, m in G.edges():
        style = "solid" if (u, v) in profile.strong_edges else "dashed"
        lines.append(f'  {_dot_id(u)} -- {_dot_id(v)} [label="{format_rational(m)}", style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def _dot_id(text: str) -> str:
    return f'"{_dot_escape(text)}"'
