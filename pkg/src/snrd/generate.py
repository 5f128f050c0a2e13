"""Seeded random fuzzy graphs on a rational membership grid."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import BadSpec
from .graph import FuzzyGraph, as_rational, build

TOPOLOGIES = ("general", "cycle", "path", "complete", "bipartite")


@dataclass(frozen=True)
class GenSpec:
    n: int
    edge_probability: Fraction = Fraction(1, 2)
    granularity: int = 20
    seed: int = 0
    topology: str = "general"

    def __post_init__(self):
        p = as_rational(self.edge_probability)
        object.__setattr__(self, "edge_probability", p)
        if self.n < 1:
            raise BadSpec("n must be at least 1")
        if not 0 <= p <= 1:
            raise BadSpec("edge probability must lie in [0, 1]")
        if self.granularity < 1:
            raise BadSpec("granularity must be a positive integer")
        if self.topology not in TOPOLOGIES:
            raise BadSpec(f"unknown topology {self.topology!r}; expected one of {TOPOLOGIES}")
        if self.topology == "cycle" and self.n < 3:
            raise BadSpec("a cycle needs n >= 3")
        if self.topology in ("path", "bipartite") and self.n < 2:
            raise BadSpec(f"a {self.topology} needs n >= 2")

    def with_seed(self, seed: int) -> "GenSpec":
        return GenSpec(self.n, self.edge_probability, self.granularity, seed, self.topology)


_KEYS = {
    "n": "n",
    "p": "edge_probability",
    "edge_probability": "edge_probability",
    "d": "granularity",
    "granularity": "granularity",
    "seed": "seed",
    "topology": "topology",
}


def parse_genspec(text: str, **overrides) -> GenSpec:
    """Parse ``"n=8,p=0.5,D=20,topology=general"`` (commas or spaces between pairs)."""
    fields: dict = {}
    for token in text.replace(",", " ").split():
        if "=" not in token:
            raise BadSpec(f"expected key=value, got {token!r}")
        key, value = token.split("=", 1)
        name = _KEYS.get(key.strip().lower())
        if name is None:
            raise BadSpec(f"unknown generator key {key!r}")
        fields[name] = value.strip()
    fields.update({k: v for k, v in overrides.items() if v is not None})
    if "n" not in fields:
        raise BadSpec("generator spec needs n")
    try:
        return GenSpec(
            n=int(fields["n"]),
            edge_probability=as_rational(fields.get("edge_probability", "0.5")),
            granularity=int(fields.get("granularity", 20)),
            seed=int(fields.get("seed", 0)),
            topology=str(fields.get("topology", "general")),
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, BadSpec):
            raise
        raise BadSpec(str(exc)) from exc


def random_graph(spec: GenSpec) -> FuzzyGraph:
    """Draw sigma on the grid, pick the topology, then draw each mu at or below ``min(sigma)``.

    Complete and bipartite topologies use effective edges (``mu = min(sigma)``)
    so the result is a complete (bipartite) fuzzy graph.
    """
    rng = random.Random(spec.seed)
    D = spec.granularity
    ids = [f"v{i}" for i in range(1, spec.n + 1)]
    grid = {v: rng.randint(1, D) for v in ids}

    if spec.topology == "general":
        p = spec.edge_probability
        pairs = [
            (a, b) for a, b in combinations(ids, 2) if rng.randrange(p.denominator) < p.numerator
        ]
    elif spec.topology == "cycle":
        pairs = [(ids[i], ids[(i + 1) % spec.n]) for i in range(spec.n)]
    elif spec.topology == "path":
        pairs = [(ids[i], ids[i + 1]) for i in range(spec.n - 1)]
    elif spec.topology == "complete":
        pairs = list(combinations(ids, 2))
    else:
        split = rng.randint(1, spec.n - 1)
        pairs = [(a, b) for a in ids[:split] for b in ids[split:]]

    effective = spec.topology in ("complete", "bipartite")
    edges = []
    for a, b in pairs:
        cap = min(grid[a], grid[b])
        k = cap if effective else rng.randint(1, cap)
        edges.append((a, b, Fraction(k, D)))
    return build([(v, Fraction(grid[v], D)) for v in ids], edges)
