"""Strong domination and strong-neighbors Roman domination: checks and exact optima.

Two routes compute the Roman parameter. :func:`gamma_snr_bruteforce` walks
every labeling in lexicographic order (vectorised with numpy over integer
weights) and serves as the oracle. :func:`gamma_snr` is a depth-first
branch and bound over the same lexicographic order. Both return the
lexicographically smallest optimal labeling (vertices in input order,
``0 < 1 < 2``), so their witnesses coincide.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Optional, Union

import numpy as np

from .connectivity import StrongProfile
from .errors import InvalidLabeling, NotDominating, TooLarge
from .graph import ZERO, FuzzyGraph

DEFAULT_BRUTE_LIMIT = 15
GAMMA_S_LIMIT = 24
BLOCK_DIGITS_3 = 10
BLOCK_DIGITS_2 = 16


def brute_limit(limit: Optional[int] = None) -> int:
    """Vertex cap for exhaustive labeling search; ``SNRD_BRUTE_LIMIT`` overrides the default."""
    if limit is not None:
        return int(limit)
    env = os.environ.get("SNRD_BRUTE_LIMIT")
    return int(env) if env else DEFAULT_BRUTE_LIMIT


@dataclass(frozen=True)
class Labeling:
    """A total map ``V -> {0, 1, 2}`` together with its weight ``sum f(u) * mu_s(u)``."""

    labels: Mapping[str, int]
    weight: Fraction
    mu_s: Mapping[str, Fraction] = field(repr=False, compare=False)

    @classmethod
    def of(cls, profile: StrongProfile, labels: Mapping[str, int]) -> "Labeling":
        G = profile.graph
        for v in labels:
            G.index(v)
        missing = [v for v in G.vertices if v not in labels]
        if missing:
            raise InvalidLabeling(f"labeling is missing vertices {missing}")
        clean = {}
        for v in G.vertices:
            lab = labels[v]
            if lab not in (0, 1, 2) or isinstance(lab, bool):
                raise InvalidLabeling(f"label of {v!r} must be 0, 1 or 2, got {lab!r}")
            clean[v] = int(lab)
        weight = sum((clean[v] * profile.mu_s[v] for v in G.vertices), ZERO)
        return cls(clean, weight, profile.mu_s)

    @property
    def partition(self) -> tuple[frozenset[str], frozenset[str], frozenset[str]]:
        parts: tuple[set, set, set] = (set(), set(), set())
        for v, lab in self.labels.items():
            parts[lab].add(v)
        return tuple(frozenset(p) for p in parts)  # type: ignore[return-value]

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.labels.values())


@dataclass(frozen=True)
class SolveResult:
    value: Fraction
    witness: Union[Labeling, frozenset]
    nodes_explored: int
    method: str


# -- strong domination -------------------------------------------------------


def is_strong_dominating(G: FuzzyGraph, profile: StrongProfile, D: Iterable[str]) -> bool:
    D = G.check_vertices(D)
    return all(v in D or profile.ns[v] & D for v in G.vertices)


def dominating_weight(G: FuzzyGraph, profile: StrongProfile, D: Iterable[str]) -> Fraction:
    D = G.check_vertices(D)
    return sum((profile.mu_s[v] for v in D), ZERO)


def is_minimal_strong_dominating(G: FuzzyGraph, profile: StrongProfile, D: Iterable[str]) -> bool:
    """Minimality through the local characterisation.

    Each member must either have no strong neighbour inside ``D`` or own a
    private vertex outside ``D`` whose only strong neighbour in ``D`` it is.
    """
    D = G.check_vertices(D)
    if not is_strong_dominating(G, profile, D):
        raise NotDominating("set is not strong dominating")
    outside = [v for v in G.vertices if v not in D]
    for u in D:
        if not (profile.ns[u] & D):
            continue
        if any(profile.ns[v] & D == {u} for v in outside):
            continue
        return False
    return True


def gamma_s(
    G: FuzzyGraph,
    profile: StrongProfile,
    within: Optional[Iterable[str]] = None,
) -> SolveResult:
    """Minimum-weight strong dominating set by exhaustive subset enumeration.

    ``within`` restricts the problem to a vertex subset while keeping the
    strong-neighbour relation and ``mu_s`` of ``G``. This is the sense in
    which the 2-labelled set of an optimal Roman labeling dominates the
    subgraph spanned by its 0- and 2-labelled vertices. The witness is the
    lexicographically smallest optimal set, comparing sorted vertex
    positions.
    """
    verts = [v for v in G.vertices if within is None or v in G.check_vertices(within)]
    n = len(verts)
    if n > GAMMA_S_LIMIT:
        raise TooLarge(f"gamma_s enumeration is capped at {GAMMA_S_LIMIT} vertices, got {n}")
    if n == 0:
        return SolveResult(ZERO, frozenset(), 1, "bruteforce")
    pos = {v: i for i, v in enumerate(verts)}
    A = np.zeros((n, n), dtype=np.int32)
    for v in verts:
        for u in profile.ns[v]:
            if u in pos:
                A[pos[v], pos[u]] = 1
    w, scale = _scaled([profile.mu_s[v] for v in verts])

    best = None
    best_sets: list[tuple[int, ...]] = []
    for block in _blocks(n, 2, BLOCK_DIGITS_2):
        inD = block.astype(bool)
        covered = (block.astype(np.int32) @ A) > 0
        ok = (inD | covered).all(axis=1)
        if not ok.any():
            continue
        weights = _dot(block, w)
        cand = weights[ok]
        m = cand.min()
        if best is None or m < best:
            best, best_sets = m, []
        if m == best:
            rows = block[ok][cand == m]
            best_sets.extend(tuple(np.flatnonzero(r).tolist()) for r in rows)
    chosen = min(best_sets)
    return SolveResult(
        Fraction(int(best), scale), frozenset(verts[i] for i in chosen), 2**n, "bruteforce"
    )


# -- strong-neighbors Roman domination ----------------------------------------


def validate_snrdf(G: FuzzyGraph, profile: StrongProfile, f) -> bool:
    """Every 0-labelled vertex has a strong neighbour labelled 2."""
    labels = f.labels if isinstance(f, Labeling) else f
    for v in labels:
        G.index(v)
    missing = [v for v in G.vertices if v not in labels]
    if missing:
        raise InvalidLabeling(f"labeling is missing vertices {missing}")
    for v in G.vertices:
        if labels[v] not in (0, 1, 2):
            raise InvalidLabeling(f"label of {v!r} must be 0, 1 or 2, got {labels[v]!r}")
        if labels[v] == 0 and not any(labels[u] == 2 for u in profile.ns[v]):
            return False
    return True


def swap_partition(f: Labeling) -> Labeling:
    """Exchange labels 0 and 2; 1 stays."""
    labels = {v: 2 - lab if lab != 1 else 1 for v, lab in f.labels.items()}
    weight = sum((lab * f.mu_s[v] for v, lab in labels.items()), ZERO)
    return Labeling(labels, weight, f.mu_s)


def gamma_snr_bruteforce(
    G: FuzzyGraph, profile: StrongProfile, limit: Optional[int] = None
) -> SolveResult:
    """Exact optimum over all ``3**n`` labelings."""
    verts = G.vertices
    n = len(verts)
    cap = brute_limit(limit)
    if n > cap:
        raise TooLarge(f"brute force is capped at {cap} vertices, got {n}")
    A = _strong_adjacency(G, profile)
    w, scale = _scaled([profile.mu_s[v] for v in verts])

    best = None
    best_row = None
    for block in _blocks(n, 3, BLOCK_DIGITS_3):
        zero = block == 0
        covered = ((block == 2).astype(np.int32) @ A) > 0
        ok = ~(zero & ~covered).any(axis=1)
        if not ok.any():
            continue
        weights = _dot(block, w)
        idx = np.flatnonzero(ok)
        k = idx[np.argmin(weights[idx])]
        if best is None or weights[k] < best:
            best, best_row = weights[k], block[k].tolist()
    labels = dict(zip(verts, best_row))
    witness = Labeling.of(profile, labels)
    assert witness.weight == Fraction(int(best), scale)
    return SolveResult(witness.weight, witness, 3**n, "bruteforce")


def gamma_snr(G: FuzzyGraph, profile: StrongProfile) -> SolveResult:
    """Exact optimum by depth-first branch and bound.

    Vertices are assigned in input order trying 0, 1, 2, so the first
    labeling reaching the optimal value is the lexicographically smallest
    one; later ties are pruned. Vertices with no strong neighbour are
    fixed to 1, since 0 is infeasible for them and 1 and 2 both cost 0.

    The bound adds to the accumulated weight a share for every open vertex
    not yet covered by an assigned 2: a 2-vertex spreads its cost evenly
    over its closed strong neighbourhood, so each open vertex pays at least
    the smallest of its own 1-cost, its own 2-share, or the 2-share of an
    open strong neighbour. A second bound charges an uncovered 0-vertex the
    cheapest open neighbour that could still cover it.
    """
    verts = G.vertices
    n = len(verts)
    nb = [[G.index(u) for u in profile.strong_neighbors(v)] for v in verts]
    denom_extra = math.lcm(*(len(x) + 1 for x in nb))
    w, scale = _scaled([profile.mu_s[v] for v in verts], extra=denom_extra)
    w = [int(x) for x in w]
    share = [2 * w[i] // (len(nb[i]) + 1) for i in range(n)]
    closers: list[list[int]] = [[] for _ in range(n)]
    for j in range(n):
        closers[max([j] + nb[j])].append(j)

    labels = [0] * n
    twos = [0] * n
    best = [None]
    best_labels: list = [None]
    nodes = [0]

    def bound(nxt: int, acc: int) -> int:
        lb1 = acc
        for u in range(nxt, n):
            if twos[u] or not nb[u]:
                continue
            h = share[u]
            for v in nb[u]:
                if v >= nxt and share[v] < h:
                    h = share[v]
            lb1 += h
        lb2 = acc
        for j in range(nxt):
            if labels[j] == 0 and not twos[j]:
                cheapest = min(2 * w[v] for v in nb[j] if v >= nxt)
                if acc + cheapest > lb2:
                    lb2 = acc + cheapest
        return max(lb1, lb2)

    def feasible_after(i: int) -> bool:
        for j in closers[i]:
            if labels[j] == 0 and not twos[j]:
                return False
        return True

    def dfs(i: int, acc: int) -> None:
        if i == n:
            if best[0] is None or acc < best[0]:
                best[0] = acc
                best_labels[0] = list(labels)
            return
        choices = (1,) if not nb[i] else (0, 1, 2)
        for lab in choices:
            nodes[0] += 1
            labels[i] = lab
            cost = acc + lab * w[i]
            if lab == 2:
                for k in nb[i]:
                    twos[k] += 1
            if feasible_after(i):
                if best[0] is None or bound(i + 1, cost) < best[0]:
                    dfs(i + 1, cost)
            if lab == 2:
                for k in nb[i]:
                    twos[k] -= 1
        labels[i] = 0

    dfs(0, 0)
    witness = Labeling.of(profile, dict(zip(verts, best_labels[0])))
    assert witness.weight == Fraction(best[0], scale)
    return SolveResult(witness.weight, witness, nodes[0], "branch_and_bound")


def solve_snr(
    G: FuzzyGraph, profile: StrongProfile, brute: bool = False, limit: Optional[int] = None
) -> SolveResult:
    if brute:
        return gamma_snr_bruteforce(G, profile, limit=limit)
    return gamma_snr(G, profile)


# -- helpers -----------------------------------------------------------------


def _strong_adjacency(G: FuzzyGraph, profile: StrongProfile) -> np.ndarray:
    n = len(G)
    A = np.zeros((n, n), dtype=np.int32)
    for u, v in profile.strong_edges:
        i, j = G.index(u), G.index(v)
        A[i, j] = A[j, i] = 1
    return A


def _scaled(values: list[Fraction], extra: int = 1) -> tuple[np.ndarray, int]:
    """Integer numerators over a common denominator, as an int64 or object array."""
    scale = math.lcm(extra, *(v.denominator for v in values)) if values else extra
    ints = [int(v * scale) for v in values]
    if sum(ints) * 2 < 2**62:
        return np.array(ints, dtype=np.int64), scale
    return np.array(ints, dtype=object), scale


def _dot(block: np.ndarray, w: np.ndarray) -> np.ndarray:
    if w.dtype == object:
        return block.astype(object) @ w
    return block.astype(np.int64) @ w


@lru_cache(maxsize=8)
def _suffixes(m: int, base: int) -> np.ndarray:
    return np.array(list(product(range(base), repeat=m)), dtype=np.int8).reshape(-1, m)


def _blocks(n: int, base: int, block_digits: int):
    """All base-``base`` vectors of length ``n`` in lexicographic order, in chunks."""
    m = min(n, block_digits)
    tail = _suffixes(m, base)
    for prefix in product(range(base), repeat=n - m):
        if prefix:
            head = np.broadcast_to(np.array(prefix, dtype=np.int8), (tail.shape[0], n - m))
            yield np.concatenate([head, tail], axis=1)
        else:
            yield tail
