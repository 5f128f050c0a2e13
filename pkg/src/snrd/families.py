"""Special families (complete, complete bipartite, cycles, paths) and their closed forms.

Closed forms return exact values; the ``*_check`` functions evaluate a
claimed equivalence on the instance and raise :class:`TheoremViolation`
when the two sides disagree, so sweeps surface counterexamples loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .connectivity import (
    StrongProfile,
    cycle_order,
    path_order,
    strong_profile,
)
from .errors import (
    BadIndex,
    EmptySide,
    FamilyError,
    NotComplete,
    NotCompleteBipartite,
    NotStrongCycle,
    OutOfHypothesis,
    TheoremViolation,
    WrongResidue,
)
from .graph import ZERO, FuzzyGraph, as_rational, build, is_effective
from .solvers import Labeling, gamma_snr

PATH_BOUND_MIN_N = 6


# -- constructors --------------------------------------------------------------


def make_complete(sigmas: Sequence) -> FuzzyGraph:
    sig = [as_rational(s) for s in sigmas]
    ids = [f"v{i}" for i in range(1, len(sig) + 1)]
    edges = [(ids[i], ids[j], min(sig[i], sig[j])) for i, j in combinations(range(len(sig)), 2)]
    return build(list(zip(ids, sig)), edges)


def make_complete_bipartite(sigma_x: Sequence, sigma_y: Sequence) -> FuzzyGraph:
    if not sigma_x or not sigma_y:
        raise EmptySide("both sides of a complete bipartite graph must be nonempty")
    sx = [as_rational(s) for s in sigma_x]
    sy = [as_rational(s) for s in sigma_y]
    xs = [f"x{i}" for i in range(1, len(sx) + 1)]
    ys = [f"y{j}" for j in range(1, len(sy) + 1)]
    verts = list(zip(xs, sx)) + list(zip(ys, sy))
    edges = [(x, y, min(a, b)) for x, a in zip(xs, sx) for y, b in zip(ys, sy)]
    return build(verts, edges)


def make_cycle(sigmas: Sequence, mus: Sequence) -> FuzzyGraph:
    """Cycle ``u1 .. un u1``; ``mus[i]`` is the membership of ``u(i+1) u(i+2)`` (wrapping)."""
    n = len(sigmas)
    if n < 3 or len(mus) != n:
        raise FamilyError("a cycle needs n >= 3 vertices and exactly n edge memberships")
    ids = [f"u{i}" for i in range(1, n + 1)]
    return build(
        list(zip(ids, sigmas)), [(ids[i], ids[(i + 1) % n], mus[i]) for i in range(n)]
    )


def make_path(sigmas: Sequence, mus: Sequence) -> FuzzyGraph:
    n = len(sigmas)
    if n < 2 or len(mus) != n - 1:
        raise FamilyError("a path needs n >= 2 vertices and exactly n - 1 edge memberships")
    ids = [f"u{i}" for i in range(1, n + 1)]
    return build(list(zip(ids, sigmas)), [(ids[i], ids[i + 1], mus[i]) for i in range(n - 1)])


# -- universal vertices, complete and complete bipartite graphs -----------------


def gamma_snr_universal(G: FuzzyGraph, profile: StrongProfile) -> Optional[Fraction]:
    """Twice the smallest ``mu_s`` over strong-universal vertices, or ``None`` without one."""
    if not profile.universal:
        return None
    return 2 * min(profile.mu_s[v] for v in profile.universal)


def is_complete(G: FuzzyGraph) -> bool:
    return all(is_effective(G, u, v) for u, v in combinations(G.vertices, 2))


def gamma_snr_complete(K: FuzzyGraph, profile: StrongProfile) -> Fraction:
    if not is_complete(K):
        raise NotComplete("graph is not a complete fuzzy graph")
    return 2 * min(profile.mu_s.values())


def bipartite_sides(K: FuzzyGraph, profile: StrongProfile) -> tuple[list[str], list[str]]:
    """Sides ``(X, Y)`` of a complete bipartite fuzzy graph, each sorted by ``mu_s``.

    ``X`` is the smaller side; on equal sizes the side holding the smaller
    ``mu_s`` (then the earlier vertex) comes first.
    """
    verts = K.vertices
    if len(verts) < 2:
        raise NotCompleteBipartite("a complete bipartite graph needs two nonempty sides")
    colour = {verts[0]: 0}
    stack = [verts[0]]
    while stack:
        u = stack.pop()
        for v in K.neighbors(u):
            if v not in colour:
                colour[v] = 1 - colour[u]
                stack.append(v)
            elif colour[v] == colour[u]:
                raise NotCompleteBipartite("underlying graph is not bipartite")
    if len(colour) != len(verts):
        raise NotCompleteBipartite("underlying graph is disconnected")
    sides = [[v for v in verts if colour[v] == c] for c in (0, 1)]
    for a in sides[0]:
        for b in sides[1]:
            if not is_effective(K, a, b):
                raise NotCompleteBipartite(f"pair {a}-{b} is not an effective edge")
    key = lambda v: (profile.mu_s[v], K.index(v))  # noqa: E731
    sides = [sorted(s, key=key) for s in sides]
    sides.sort(key=lambda s: (len(s), key(s[0])))
    return sides[0], sides[1]


def gamma_snr_bipartite(K: FuzzyGraph, profile: StrongProfile) -> Fraction:
    X, Y = bipartite_sides(K, profile)
    ms = profile.mu_s
    a = ms[X[0]]
    if len(X) == 1:
        return 2 * a
    if len(X) == 2 and len(Y) == 2:
        return min(4 * a, 2 * a + min(ms[X[1]], ms[Y[1]]))
    if len(X) == 2:
        return min(4 * a, 2 * a + ms[X[1]])
    return 4 * a


def bipartite_case(K: FuzzyGraph, profile: StrongProfile) -> str:
    X, Y = bipartite_sides(K, profile)
    if len(X) == 1:
        return "i"
    if len(X) == 2:
        return "ii" if len(Y) == 2 else "iii"
    return "iv"


# -- cycles ----------------------------------------------------------------------


@dataclass(frozen=True)
class CycleProfile:
    """A cycle read in order ``u1 .. un`` with ``weights[i] = mu(u(i+1), u(i+2))`` (wrapping)."""

    graph: FuzzyGraph
    profile: StrongProfile
    order: tuple[str, ...]
    weights: tuple[Fraction, ...]
    mu_s: tuple[Fraction, ...]
    q: Fraction
    mu_min: Fraction
    mu_max: Fraction

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def k(self) -> int:
        return self.n // 3

    @property
    def residue(self) -> int:
        return self.n % 3

    @property
    def is_strong(self) -> bool:
        return len(self.profile.strong_edges) == self.n


def cycle_profile(C: FuzzyGraph, profile: Optional[StrongProfile] = None) -> CycleProfile:
    profile = profile or strong_profile(C)
    seq = cycle_order(C)
    n = len(seq)
    weights = tuple(C.mu(seq[i], seq[(i + 1) % n]) for i in range(n))
    return CycleProfile(
        graph=C,
        profile=profile,
        order=tuple(seq),
        weights=weights,
        mu_s=tuple(profile.mu_s[v] for v in seq),
        q=sum(weights, ZERO),
        mu_min=min(weights),
        mu_max=max(weights),
    )


def _require_strong(C: CycleProfile) -> None:
    if not C.is_strong:
        raise NotStrongCycle("cycle has an edge that is not strong")


def cycle_upper_bound(C: CycleProfile) -> Fraction:
    """``(1 - k/n) * (q - (mu_max - mu_min))`` with ``k = n // 3``."""
    _require_strong(C)
    return (1 - Fraction(C.k, C.n)) * (C.q - (C.mu_max - C.mu_min))


def cycle_pattern_labelings(C: CycleProfile, m: int) -> Labeling:
    """Periodic labeling ``f_m`` (``m`` is 1-based) used to average down to the cycle bound.

    n = 3k:   2 on u_m, u_(m+3), ..., k of them.
    n = 3k+1: 1 on u_m, 2 on u_(m+2), u_(m+5), ..., k of them.
    n = 3k+2: 2 on u_m, u_(m+3), ..., k+1 of them.
    """
    _require_strong(C)
    n, k = C.n, C.k
    if not 1 <= m <= n:
        raise BadIndex(f"pattern index must lie in 1..{n}, got {m}")
    labels = [0] * n
    at = lambda offset: (m - 1 + offset) % n  # noqa: E731
    if C.residue == 0:
        for i in range(k):
            labels[at(3 * i)] = 2
    elif C.residue == 1:
        labels[at(0)] = 1
        for i in range(k):
            labels[at(2 + 3 * i)] = 2
    else:
        for i in range(k + 1):
            labels[at(3 * i)] = 2
    return Labeling.of(C.profile, dict(zip(C.order, labels)))


def pattern_difference(C: CycleProfile, m: int) -> tuple[Fraction, Fraction]:
    """For n = 3k+1: ``(w(f_m) - w(f_(m+3)), mu_s(u_m) - 2mu_s(u_(m+1)) + 2mu_s(u_(m+2)) - mu_s(u_(m+3)))``."""
    if C.residue != 1:
        raise WrongResidue("the pattern difference identity needs n = 1 (mod 3)")
    n = C.n
    nxt = (m - 1 + 3) % n + 1
    direct = cycle_pattern_labelings(C, m).weight - cycle_pattern_labelings(C, nxt).weight
    s = lambda off: C.mu_s[(m - 1 + off) % n]  # noqa: E731
    return direct, s(0) - 2 * s(1) + 2 * s(2) - s(3)


def cycle_valley(weights: Sequence[Fraction]) -> bool:
    """Rotated so a heaviest edge closes the cycle, the weights fall to two consecutive
    minimum edges and then rise again."""
    n = len(weights)
    lo, hi = min(weights), max(weights)
    for r in range(n):
        if weights[(r + n - 1) % n] != hi:
            continue
        e = [weights[(r + i) % n] for i in range(n)]
        for j in range(n - 2):
            if e[j] == lo and e[j + 1] == lo and _nonincreasing(e[: j + 1]) and _nondecreasing(e[j + 1 :]):
                return True
    return False


@dataclass(frozen=True)
class SumCheck:
    bound_holds: bool
    equality: bool
    shape: bool
    total: Fraction
    bound: Fraction


def cycle_mus_sum_check(C: CycleProfile) -> SumCheck:
    """Compare ``sum mu_s`` with ``q - (mu_max - mu_min)`` and test the valley shape."""
    _require_strong(C)
    total = sum(C.mu_s, ZERO)
    bound = C.q - (C.mu_max - C.mu_min)
    res = SumCheck(total <= bound, total == bound, cycle_valley(C.weights), total, bound)
    if not res.bound_holds or res.equality != res.shape:
        raise TheoremViolation(
            "cycle mu_s sum claim fails", weights=[str(w) for w in C.weights], result=res
        )
    return res


def cycle_extremal_condition(C: CycleProfile) -> bool:
    """At least n-1 edges sit at the minimum weight (so at most one heavier edge)."""
    return sum(1 for w in C.weights if w == C.mu_min) >= C.n - 1


def cycle_extremal_check(C: CycleProfile, gamma: Optional[Fraction] = None) -> bool:
    """Evaluate the extremal condition and confirm it matches ``gamma == bound``.

    ``gamma`` defaults to the exact optimum from the branch-and-bound solver.
    """
    _require_strong(C)
    if C.residue == 0:
        raise WrongResidue("the extremal characterisation needs n = 1 or 2 (mod 3)")
    cond = cycle_extremal_condition(C)
    if gamma is None:
        gamma = gamma_snr(C.graph, C.profile).value
    bound = cycle_upper_bound(C)
    if cond != (gamma == bound):
        raise TheoremViolation(
            "cycle extremal characterisation fails",
            weights=[str(w) for w in C.weights],
            gamma=gamma,
            bound=bound,
            condition=cond,
        )
    return cond


# -- paths -----------------------------------------------------------------------


@dataclass(frozen=True)
class PathProfile:
    """A path read as ``u1 .. un`` with ``weights[i] = mu(u(i+1), u(i+2))``.

    ``ell`` and ``ell_star`` are 1-based positions of the first minimum- and
    first maximum-weight edge.
    """

    graph: FuzzyGraph
    profile: StrongProfile
    order: tuple[str, ...]
    weights: tuple[Fraction, ...]
    mu_s: tuple[Fraction, ...]
    q: Fraction
    mu_min: Fraction
    mu_max: Fraction
    ell: int
    ell_star: int

    @property
    def n(self) -> int:
        return len(self.order)


def path_profile(P: FuzzyGraph, profile: Optional[StrongProfile] = None) -> PathProfile:
    profile = profile or strong_profile(P)
    seq = path_order(P)
    weights = tuple(P.mu(a, b) for a, b in zip(seq, seq[1:]))
    lo, hi = min(weights), max(weights)
    return PathProfile(
        graph=P,
        profile=profile,
        order=tuple(seq),
        weights=weights,
        mu_s=tuple(profile.mu_s[v] for v in seq),
        q=sum(weights, ZERO),
        mu_min=lo,
        mu_max=hi,
        ell=weights.index(lo) + 1,
        ell_star=weights.index(hi) + 1,
    )


@dataclass(frozen=True)
class PathBound:
    value: Fraction
    in_hypothesis: bool


def path_upper_bound(P: PathProfile) -> PathBound:
    """``2/3 * (q + mu_min + mu_max)``; guaranteed only for ``n >= 6``."""
    value = Fraction(2, 3) * (P.q + P.mu_min + P.mu_max)
    return PathBound(value, P.n >= PATH_BOUND_MIN_N)


def path_shape(weights: Sequence[Fraction]) -> bool:
    """Edge weights descend to a minimum at ``ell`` and then climb to a maximum at ``ell*``,
    with everything after ``ell*`` held at the maximum (read in either direction)."""
    return _path_shape_oriented(list(weights)) or _path_shape_oriented(list(weights)[::-1])


def _path_shape_oriented(e: list[Fraction]) -> bool:
    lo, hi = min(e), max(e)
    m = len(e)
    for ell in range(m):
        if e[ell] != lo or not _nonincreasing(e[: ell + 1]):
            continue
        for star in range(ell, m):
            if e[star] != hi:
                continue
            if _nondecreasing(e[ell : star + 1]) and all(x == hi for x in e[star:]):
                return True
    return False


def path_mus_sum_check(P: PathProfile) -> SumCheck:
    """Compare ``sum mu_s`` with ``q + mu_min`` and test the monotone shape."""
    if P.n < 3:
        raise OutOfHypothesis("the path mu_s sum comparison needs n >= 3")
    total = sum(P.mu_s, ZERO)
    bound = P.q + P.mu_min
    res = SumCheck(total <= bound, total == bound, path_shape(P.weights), total, bound)
    if not res.bound_holds or res.equality != res.shape:
        raise TheoremViolation(
            "path mu_s sum claim fails", weights=[str(w) for w in P.weights], result=res
        )
    return res


def path_extremal_conditions(P: PathProfile) -> bool:
    """Shape with equality in the ``mu_s`` sum, and the four end ``mu_s`` values at ``mu_max``."""
    if P.n < 3:
        return False
    total = sum(P.mu_s, ZERO)
    shaped = total == P.q + P.mu_min and path_shape(P.weights)
    ends = (P.mu_s[0], P.mu_s[1], P.mu_s[-2], P.mu_s[-1])
    return shaped and all(x == P.mu_max for x in ends)


def path_extremal_necessary(P: PathProfile, gamma: Fraction) -> bool:
    """Return whether the extremal conditions hold.

    When ``gamma`` meets the path bound inside its hypothesis (``n >= 6``) the
    conditions are required, and a miss raises :class:`TheoremViolation`.
    """
    cond = path_extremal_conditions(P)
    bound = path_upper_bound(P)
    if bound.in_hypothesis and gamma == bound.value and not cond:
        raise TheoremViolation(
            "path meets its bound without the necessary shape",
            weights=[str(w) for w in P.weights],
            gamma=gamma,
        )
    return cond


def _nonincreasing(seq: Sequence) -> bool:
    return all(a >= b for a, b in zip(seq, seq[1:]))


def _nondecreasing(seq: Sequence) -> bool:
    return all(a <= b for a, b in zip(seq, seq[1:]))

