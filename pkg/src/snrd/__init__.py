"""Exact strong-neighbors Roman domination on fuzzy graphs with rational memberships."""

from .audit import AuditReport, Check, audit_bounds, audit_instance, audit_optimum_structure
from .connectivity import (
    StrongProfile,
    conn_matrix,
    path_strength,
    strength_of_connectedness,
    strong_profile,
    to_dot,
)
from .errors import GraphError, ParseError, SnrdError, TheoremViolation, TooLarge
from .graph import FuzzyGraph, as_rational, build, complement, format_rational, order, size
from .solvers import (
    Labeling,
    SolveResult,
    gamma_s,
    gamma_snr,
    gamma_snr_bruteforce,
    is_strong_dominating,
    validate_snrdf,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "Check",
    "FuzzyGraph",
    "GraphError",
    "Labeling",
    "ParseError",
    "SnrdError",
    "SolveResult",
    "StrongProfile",
    "TheoremViolation",
    "TooLarge",
    "as_rational",
    "audit_bounds",
    "audit_instance",
    "audit_optimum_structure",
    "build",
    "complement",
    "conn_matrix",
    "format_rational",
    "gamma_s",
    "gamma_snr",
    "gamma_snr_bruteforce",
    "is_strong_dominating",
    "order",
    "path_strength",
    "size",
    "strength_of_connectedness",
    "strong_profile",
    "to_dot",
    "validate_snrdf",
]
