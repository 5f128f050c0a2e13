"""Fuzzy graph value type with exact rational memberships.

A fuzzy graph is a vertex set with memberships ``sigma(u)`` in (0, 1] and
edge memberships ``mu(u, v)`` in (0, 1] bounded by ``min(sigma(u), sigma(v))``.
Pairs without a stored edge have membership 0. All arithmetic uses
:class:`fractions.Fraction`, so equality tests are exact.
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdge,
    DuplicateVertex,
    EdgeExceedsVertexMembership,
    GraphError,
    MembershipOutOfRange,
    ParseError,
    SelfLoop,
    UnknownEndpoint,
    UnknownVertex,
)

Rational = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value) -> Fraction:
    """Convert ``value`` to an exact Fraction.

    Strings are parsed exactly ("0.01" -> 1/100, "1/3" -> 1/3). Floats are
    read through their shortest repr, so ``0.3`` becomes 3/10 rather than
    the binary approximation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a membership value: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot parse {value!r} as an exact rational") from exc
    raise ParseError(f"not a membership value: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render an exact value as a decimal string when it terminates, else ``num/den``."""
    value = Fraction(value)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    digits = max(twos, fives)
    if digits == 0:
        return str(value.numerator)
    scaled = value * 10**digits
    assert scaled.denominator == 1
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled.numerator)).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


class FuzzyGraph:
    """Immutable undirected fuzzy graph.

    Vertices keep their input order; every deterministic choice in the
    package (witness tie-breaking, DOT output, cycle orientation) follows it.
    """

    __slots__ = ("_ids", "_index", "_sigma", "_mu", "_adj")

    def __init__(self, vertices: Iterable, edges: Iterable = ()):
        ids: list[str] = []
        index: dict[str, int] = {}
        sigma: dict[str, Fraction] = {}
        for vid, s in vertices:
            vid = str(vid)
            if vid in index:
                raise DuplicateVertex(f"duplicate vertex {vid!r}")
            s = as_rational(s)
            if not ZERO < s <= ONE:
                raise MembershipOutOfRange(f"sigma({vid}) = {format_rational(s)} is outside (0, 1]")
            index[vid] = len(ids)
            ids.append(vid)
            sigma[vid] = s
        if not ids:
            raise GraphError("a fuzzy graph needs at least one vertex")

        mu: dict[tuple[str, str], Fraction] = {}
        adj: dict[str, dict[str, Fraction]] = {v: {} for v in ids}
        for u, v, m in edges:
            u, v = str(u), str(v)
            for end in (u, v):
                if end not in index:
                    raise UnknownEndpoint(f"edge endpoint {end!r} is not a vertex")
            if u == v:
                raise SelfLoop(f"self-loop on {u!r}")
            m = as_rational(m)
            if not ZERO < m <= ONE:
                raise MembershipOutOfRange(f"mu({u},{v}) = {format_rational(m)} is outside (0, 1]")
            if m > min(sigma[u], sigma[v]):
                raise EdgeExceedsVertexMembership(
                    f"mu({u},{v}) = {format_rational(m)} exceeds "
                    f"min(sigma) = {format_rational(min(sigma[u], sigma[v]))}"
                )
            key = (u, v) if index[u] < index[v] else (v, u)
            if key in mu:
                raise DuplicateEdge(f"edge {key[0]}-{key[1]} given twice")
            mu[key] = m
            adj[u][v] = m
            adj[v][u] = m

        self._ids = tuple(ids)
        self._index = index
        self._sigma = sigma
        self._mu = dict(sorted(mu.items(), key=lambda kv: (index[kv[0][0]], index[kv[0][1]])))
        self._adj = {
            v: dict(sorted(nb.items(), key=lambda kv: index[kv[0]])) for v, nb in adj.items()
        }

    # -- lookups -----------------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._ids

    def __len__(self) -> int:
        return len(self._ids)

    def __iter__(self) -> Iterator[str]:
        return iter(self._ids)

    def __contains__(self, vid) -> bool:
        return vid in self._index

    def index(self, vid: str) -> int:
        try:
            return self._index[vid]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {vid!r}") from None

    def check_vertices(self, vids: Iterable[str]) -> frozenset[str]:
        out = frozenset(vids)
        for v in out:
            self.index(v)
        return out

    def sigma(self, vid: str) -> Fraction:
        self.index(vid)
        return self._sigma[vid]

    def mu(self, u: str, v: str) -> Fraction:
        self.index(u)
        self.index(v)
        return self._adj[u].get(v, ZERO)

    def has_edge(self, u: str, v: str) -> bool:
        return self.mu(u, v) > 0

    def neighbors(self, vid: str) -> tuple[str, ...]:
        self.index(vid)
        return tuple(self._adj[vid])

    def edges(self) -> list[tuple[str, str, Fraction]]:
        """Edges as ``(u, v, mu)`` with ``u`` before ``v`` in vertex order."""
        return [(u, v, m) for (u, v), m in self._mu.items()]

    def edge_key(self, u: str, v: str) -> tuple[str, str]:
        return (u, v) if self.index(u) < self.index(v) else (v, u)

    @property
    def n_edges(self) -> int:
        return len(self._mu)

    def sigma_items(self) -> list[tuple[str, Fraction]]:
        return [(v, self._sigma[v]) for v in self._ids]

    def induced(self, subset: Iterable[str]) -> "FuzzyGraph":
        keep = self.check_vertices(subset)
        verts = [(v, self._sigma[v]) for v in self._ids if v in keep]
        edges = [(u, v, m) for u, v, m in self.edges() if u in keep and v in keep]
        return FuzzyGraph(verts, edges)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzyGraph):
            return NotImplemented
        return self._ids == other._ids and self._sigma == other._sigma and self._mu == other._mu

    def __hash__(self) -> int:
        return hash((self._ids, tuple(self._sigma.values()), tuple(self._mu.items())))

    def __repr__(self) -> str:
        vs = ", ".join(f"{v}:{format_rational(s)}" for v, s in self.sigma_items())
        es = ", ".join(f"{u}-{v}:{format_rational(m)}" for u, v, m in self.edges())
        return f"FuzzyGraph([{vs}], [{es}])"


def build(vertices: Sequence, edges: Sequence = ()) -> FuzzyGraph:
    """Validate ``(id, sigma)`` and ``(u, v, mu)`` tuples into a :class:`FuzzyGraph`."""
    return FuzzyGraph(vertices, edges)


def order(G: FuzzyGraph) -> Fraction:
    return sum((s for _, s in G.sigma_items()), ZERO)


def size(G: FuzzyGraph) -> Fraction:
    return sum((m for _, _, m in G.edges()), ZERO)


def scalar_cardinality(G: FuzzyGraph, S: Iterable[str]) -> Fraction:
    return sum((G.sigma(v) for v in G.check_vertices(S)), ZERO)


def complement(G: FuzzyGraph) -> FuzzyGraph:
    """Pairwise ``min(sigma) - mu``; pairs that come out as 0 are left without an edge."""
    edges = []
    for u, v in combinations(G.vertices, 2):
        m = min(G.sigma(u), G.sigma(v)) - G.mu(u, v)
        if m > 0:
            edges.append((u, v, m))
    return FuzzyGraph(G.sigma_items(), edges)


def effective_capacity(G: FuzzyGraph) -> Fraction:
    """Sum of ``min(sigma(u), sigma(v))`` over all unordered pairs."""
    return sum((min(G.sigma(u), G.sigma(v)) for u, v in combinations(G.vertices, 2)), ZERO)


def is_effective(G: FuzzyGraph, u: str, v: str) -> bool:
    m = G.mu(u, v)
    return m > 0 and m == min(G.sigma(u), G.sigma(v))


