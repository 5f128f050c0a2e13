"""Machine-checked bounds and optimum-structure claims on a single instance."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .connectivity import StrongProfile, min_positive_membership, strong_profile
from .families import (
    bipartite_sides,
    gamma_snr_bipartite,
    gamma_snr_complete,
    gamma_snr_universal,
    is_complete,
)
from .errors import NotCompleteBipartite
from .graph import FuzzyGraph, complement, format_rational, is_effective, order, size
from .solvers import (
    Labeling,
    SolveResult,
    dominating_weight,
    gamma_s,
    gamma_snr,
    gamma_snr_bruteforce,
    is_strong_dominating,
    swap_partition,
    validate_snrdf,
)

PASS, FAIL, NA = "pass", "fail", "not-applicable"
CROSS_CHECK_MAX_N = 10


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    status: str
    lhs: str = ""
    rhs: str = ""

    @property
    def failed(self) -> bool:
        return self.status == FAIL


@dataclass
class AuditReport:
    instance: Optional[dict] = None
    checks: list[Check] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return FAIL if any(c.failed for c in self.checks) else PASS

    def get(self, check_id: str) -> Check:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def extend(self, other: "AuditReport") -> "AuditReport":
        ids = {c.id for c in self.checks}
        dup = ids & {c.id for c in other.checks}
        if dup:
            raise ValueError(f"duplicate check ids {sorted(dup)}")
        self.checks.extend(other.checks)
        return self

    def _add(self, check_id, anchor, ok, lhs="", rhs="") -> None:
        status = NA if ok is None else (PASS if ok else FAIL)
        self.checks.append(Check(check_id, anchor, status, _s(lhs), _s(rhs)))


def _s(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (Fraction, int)):
        return format_rational(Fraction(value))
    if value is None:
        return ""
    return str(value)


def is_effective_perfect_matching(G: FuzzyGraph) -> bool:
    """Every vertex has exactly one neighbour and each edge is effective with equal end sigmas."""
    if any(len(G.neighbors(v)) != 1 for v in G):
        return False
    return all(is_effective(G, u, v) and G.sigma(u) == G.sigma(v) for u, v, _ in G.edges())


def is_strong_matching(G: FuzzyGraph, profile: StrongProfile) -> bool:
    """All edges strong and nobody has two strong neighbours."""
    return len(profile.strong_edges) == G.n_edges and all(len(profile.ns[v]) <= 1 for v in G)


def audit_bounds(
    G: FuzzyGraph,
    profile: StrongProfile,
    gs: SolveResult,
    gsnr: SolveResult,
    cross_check: bool = True,
) -> AuditReport:
    r = AuditReport()
    g, gsv = gsnr.value, gs.value
    p, q = order(G), size(G)
    edgeless = G.n_edges == 0

    r._add("strong_edge_exists", "size q > 0 implies some strong edge",
           None if q == 0 else bool(profile.strong_edges), q, len(profile.strong_edges))
    r._add("sandwich_lower", "gamma_s <= gamma_snR", gsv <= g, gsv, g)
    r._add("sandwich_upper", "gamma_snR <= 2 gamma_s", g <= 2 * gsv, g, 2 * gsv)
    r._add("edgeless_iff_equal", "gamma_s = gamma_snR iff G has no edges",
           (gsv == g) == edgeless, gsv == g, edgeless)

    low = min_positive_membership(G)
    low2 = 2 * low if low is not None else Fraction(0)
    r._add("min_membership_lower", "2 * min positive mu <= gamma_snR", low2 <= g, low2, g)
    upper = p - max(profile.d_sn[v] - G.sigma(v) for v in G)
    r._add("neighborhood_upper", "gamma_snR <= p - max(d_SN(v) - sigma(v))", g <= upper, g, upper)

    r._add("order_upper", "gamma_snR <= p", g <= p, g, p)
    structure = is_effective_perfect_matching(G)
    r._add("order_equality_iff",
           "gamma_snR = p iff G is a disjoint union of effective edges with equal end sigmas",
           (g == p) == structure, g == p, structure)
    r._add("size_equality_iff",
           "gamma_snR = 2q iff all edges strong and every vertex has at most one strong neighbour",
           (g == 2 * q) == is_strong_matching(G, profile), g == 2 * q, is_strong_matching(G, profile))

    uni = gamma_snr_universal(G, profile)
    r._add("universal_value", "gamma_snR = 2 min mu_s over strong-universal vertices",
           None if uni is None else g == uni, g, uni)
    comp = gamma_snr_complete(G, profile) if is_complete(G) else None
    r._add("complete_value", "complete graph: gamma_snR = 2 min mu_s",
           None if comp is None else g == comp, g, comp)
    try:
        bipartite_sides(G, profile)
        bip = gamma_snr_bipartite(G, profile)
    except NotCompleteBipartite:
        bip = None
    r._add("bipartite_value", "complete bipartite closed form",
           None if bip is None else g == bip, g, bip)

    Gc = complement(G)
    if edgeless or Gc.n_edges == 0:
        r._add("nordhaus_gaddum_lower", "2(mu_min + mu_min of complement) <= sum", None)
        r._add("nordhaus_gaddum_upper", "gamma_snR(G) + gamma_snR(complement) < 2p", None)
    else:
        Pc = strong_profile(Gc)
        gc = gamma_snr(Gc, Pc).value
        lhs = 2 * (profile.mu_min + Pc.mu_min)
        r._add("nordhaus_gaddum_lower", "2(mu_min + mu_min of complement) <= sum",
               lhs <= g + gc, lhs, g + gc)
        r._add("nordhaus_gaddum_upper", "gamma_snR(G) + gamma_snR(complement) < 2p",
               g + gc < 2 * p, g + gc, 2 * p)

    if cross_check and len(G) <= CROSS_CHECK_MAX_N:
        other = gamma_snr_bruteforce(G, profile) if gsnr.method != "bruteforce" else gamma_snr(G, profile)
        same = other.value == g and other.witness.labels == gsnr.witness.labels
        r._add("solver_agreement", "branch and bound equals brute force (value and witness)",
               same, g, other.value)
    else:
        r._add("solver_agreement", "branch and bound equals brute force (value and witness)", None)
    return r


def audit_optimum_structure(G: FuzzyGraph, profile: StrongProfile, gsnr: SolveResult) -> AuditReport:
    r = AuditReport()
    f: Labeling = gsnr.witness
    V0, V1, V2 = f.partition
    ns, ms = profile.ns, profile.mu_s

    r._add("witness_valid", "witness is an SNRDF whose weight is the optimum",
           validate_snrdf(G, profile, f) and f.weight == gsnr.value, f.weight, gsnr.value)
    r._add("dominating_from_witness", "V1 u V2 is strong dominating",
           is_strong_dominating(G, profile, V1 | V2))

    bad = [(u, v) for u in V1 for v in ns[u] & V1 if ms[u] != ms[v]]
    r._add("v1_equal_mu_s", "strong neighbours inside V1 share mu_s", not bad, len(bad), 0)
    bad = [(u, v) for u in V1 for v in ns[u] & V2]
    r._add("no_strong_v1_v2", "no strong edge joins V1 and V2", not bad, len(bad), 0)
    bad = [u for u in V2 if not ns[u] & V0]
    r._add("two_has_zero_neighbor", "every 2-vertex has a strong neighbour labelled 0",
           not bad, len(bad), 0)
    r._add("v2_at_most_v0", "|V2| <= |V0|", len(V2) <= len(V0), len(V2), len(V0))
    if len(V2) == len(V0):
        bad = [u for u in V2 if len(ns[u] & V0) != 1]
        r._add("v2_private_when_balanced",
               "|V2| = |V0| implies each 2-vertex has exactly one strong neighbour in V0",
               not bad, len(bad), 0)
    else:
        r._add("v2_private_when_balanced",
               "|V2| = |V0| implies each 2-vertex has exactly one strong neighbour in V0", None)

    span = V0 | V2
    dom = gamma_s(G, profile, within=span)
    covers = all(v in V2 or ns[v] & V2 for v in span)
    w2 = dominating_weight(G, profile, V2)
    r._add("v2_min_dominating", "V2 is a minimum-weight strong dominating set of V0 u V2",
           covers and w2 == dom.value, w2, dom.value)
    # same claim with strong edges and mu_s recomputed inside the induced subgraph
    if span:
        H = G.induced(span)
        PH = strong_profile(H)
        wh = dominating_weight(H, PH, V2)
        dh = gamma_s(H, PH).value
        r._add("v2_min_dominating_induced",
               "V2 is a minimum-weight strong dominating set of the induced subgraph on V0 u V2",
               is_strong_dominating(H, PH, V2) and wh == dh, wh, dh)
    else:
        r._add("v2_min_dominating_induced",
               "V2 is a minimum-weight strong dominating set of the induced subgraph on V0 u V2", None)

    r._add("swap_valid", "exchanging labels 0 and 2 gives an SNRDF",
           validate_snrdf(G, profile, swap_partition(f)))
    return r


def audit_instance(
    G: FuzzyGraph,
    profile: Optional[StrongProfile] = None,
    brute: bool = False,
    cross_check: bool = True,
    instance: Optional[dict] = None,
) -> AuditReport:
    """Solve ``G`` exactly and run both audits."""
    profile = profile or strong_profile(G)
    gs = gamma_s(G, profile)
    gsnr = gamma_snr_bruteforce(G, profile) if brute else gamma_snr(G, profile)
    report = audit_bounds(G, profile, gs, gsnr, cross_check=cross_check)
    report.extend(audit_optimum_structure(G, profile, gsnr))
    report.instance = instance
    return report
