"""Turn an optimal labeling into a sensor deployment plan.

Label 2 marks a relay, 1 an independent transmitter and 0 a dependent
sensor that reports through a strong neighbour acting as relay.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .connectivity import StrongProfile, min_positive_membership
from .graph import ZERO, FuzzyGraph, format_rational, order
from .solvers import SolveResult

ROLES = {2: "relay", 1: "independent", 0: "dependent"}


@dataclass(frozen=True)
class Assignment:
    vertex: str
    label: int
    role: str
    relay: Optional[str] = None


@dataclass(frozen=True)
class Plan:
    assignments: tuple[Assignment, ...]
    cost: object
    lower_bound: object
    upper_bound: object
    method: str

    def to_doc(self) -> dict:
        return {
            "sensors": [
                {"id": a.vertex, "label": a.label, "role": a.role, "relay": a.relay}
                for a in self.assignments
            ],
            "cost": format_rational(self.cost),
            "bounds": {
                "lower": format_rational(self.lower_bound),
                "upper": format_rational(self.upper_bound),
            },
            "method": self.method,
        }

    def render(self) -> str:
        width = max(len(a.vertex) for a in self.assignments)
        lines = ["sensor plan"]
        for a in self.assignments:
            via = f" via {a.relay}" if a.relay else ""
            lines.append(f"  {a.vertex.ljust(width)}  {a.label}  {a.role}{via}")
        lines.append(f"total cost: {format_rational(self.cost)}")
        low, cost, up = self.lower_bound, self.cost, self.upper_bound
        lines.append(
            f"lower bound 2*min mu = {format_rational(low)} <= cost: {'ok' if low <= cost else 'VIOLATED'}"
        )
        lines.append(
            f"upper bound p - max(d_SN - sigma) = {format_rational(up)} >= cost: "
            f"{'ok' if cost <= up else 'VIOLATED'}"
        )
        return "\n".join(lines) + "\n"


def build_plan(G: FuzzyGraph, profile: StrongProfile, result: SolveResult) -> Plan:
    labels = result.witness.labels
    out = []
    for v in G:
        lab = labels[v]
        relay = None
        if lab == 0:
            relay = next(u for u in profile.strong_neighbors(v) if labels[u] == 2)
        out.append(Assignment(v, lab, ROLES[lab], relay))
    low = min_positive_membership(G)
    return Plan(
        assignments=tuple(out),
        cost=result.value,
        lower_bound=2 * low if low is not None else ZERO,
        upper_bound=order(G) - max(profile.d_sn[v] - G.sigma(v) for v in G),
        method=result.method,
    )
