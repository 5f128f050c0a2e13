"""Exact JSON serialization for graphs, labelings, solve results and reports."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from .audit import AuditReport
from .connectivity import StrongProfile
from .errors import GraphError, ParseError
from .graph import FuzzyGraph, as_rational, format_rational
from .solvers import Labeling, SolveResult

PathLike = Union[str, Path]


def fmt(value) -> Optional[str]:
    return None if value is None else format_rational(Fraction(value))


def graph_to_doc(G: FuzzyGraph) -> dict:
    return {
        "vertices": [{"id": v, "sigma": fmt(s)} for v, s in G.sigma_items()],
        "edges": [{"u": u, "v": v, "mu": fmt(m)} for u, v, m in G.edges()],
    }


def graph_from_doc(doc: Any) -> FuzzyGraph:
    """Build a graph from its JSON document; malformed documents raise :class:`ParseError`.

    Membership violations surface as the matching :class:`GraphError` subclass.
    """
    if not isinstance(doc, dict) or not isinstance(doc.get("vertices"), list):
        raise ParseError('graph document needs a "vertices" list')
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise ParseError('"edges" must be a list')
    try:
        verts = [(_str_id(item["id"]), _rational(item["sigma"])) for item in doc["vertices"]]
        es = [
            (_str_id(item["u"]), _str_id(item["v"]), _rational(item["mu"])) for item in edges
        ]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed graph entry: {exc}") from exc
    return FuzzyGraph(verts, es)


def _str_id(value: Any) -> str:
    if not isinstance(value, str):
        raise ParseError(f"vertex ids must be strings, got {value!r}")
    return value


def _rational(value: Any) -> Fraction:
    # floats would smuggle binary rounding into an exact document
    if not isinstance(value, (str, int)) or isinstance(value, bool):
        raise ParseError(f"memberships must be decimal or rational strings, got {value!r}")
    try:
        return as_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise ParseError(f"cannot parse membership {value!r}") from exc


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def loads_graph(text: str) -> FuzzyGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return graph_from_doc(doc)


def read_graph(path: PathLike) -> FuzzyGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads_graph(text)


def write_graph(G: FuzzyGraph, path: PathLike) -> None:
    Path(path).write_text(dumps(graph_to_doc(G)))


def labeling_to_doc(f: Labeling) -> dict:
    return {"labels": dict(f.labels), "weight": fmt(f.weight)}


def result_to_doc(res: SolveResult, G: Optional[FuzzyGraph] = None) -> dict:
    """Roman results carry their labeling; dominating-set results list the witness ids
    (in vertex order when ``G`` is given)."""
    if isinstance(res.witness, Labeling):
        doc = labeling_to_doc(res.witness)
    else:
        key = G.index if G is not None else None
        doc = {"witness": sorted(res.witness, key=key)}
    doc.update({"value": fmt(res.value), "method": res.method, "nodes": res.nodes_explored})
    return doc


def profile_to_doc(profile: StrongProfile) -> dict:
    G = profile.graph
    return {
        "strong_edges": [[u, v] for u, v in profile.sorted_strong_edges()],
        "strong_neighbors": {v: list(profile.strong_neighbors(v)) for v in G},
        "mu_s": {v: fmt(profile.mu_s[v]) for v in G},
        "degree": {v: fmt(profile.d[v]) for v in G},
        "strong_degree": {v: fmt(profile.d_s[v]) for v in G},
        "strong_neighborhood_degree": {v: fmt(profile.d_sn[v]) for v in G},
        "extrema": {
            "delta_s": fmt(profile.delta_s),
            "Delta_s": fmt(profile.Delta_s),
            "delta_sn": fmt(profile.delta_sn),
            "Delta_sn": fmt(profile.Delta_sn),
            "mu_min": fmt(profile.mu_min),
            "mu_max": fmt(profile.mu_max),
        },
        "universal": [v for v in G if v in profile.universal],
    }


def report_to_doc(report: AuditReport) -> dict:
    return {
        "instance": report.instance,
        "checks": [
            {"id": c.id, "anchor": c.anchor, "status": c.status, "lhs": c.lhs, "rhs": c.rhs}
            for c in report.checks
        ],
        "verdict": report.verdict,
    }
