"""``snrd`` command line: analyze, solve, family, audit, plan, gen.

Exit codes: 0 success, 2 parse or validation error, 3 size limit,
4 audit failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .audit import audit_instance
from .connectivity import strong_profile, to_dot
from .errors import BadSpec, SnrdError, TheoremViolation, TooLarge
from .families import (
    bipartite_case,
    cycle_extremal_condition,
    cycle_mus_sum_check,
    cycle_pattern_labelings,
    cycle_profile,
    cycle_upper_bound,
    gamma_snr_bipartite,
    gamma_snr_complete,
    gamma_snr_universal,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_path,
    path_extremal_conditions,
    path_mus_sum_check,
    path_profile,
    path_upper_bound,
)
from .generate import parse_genspec, random_graph
from .graph import FuzzyGraph, order, size
from .io import (
    dumps,
    fmt,
    graph_to_doc,
    profile_to_doc,
    read_graph,
    report_to_doc,
    result_to_doc,
    write_graph,
)
from .plan import build_plan
from .solvers import GAMMA_S_LIMIT, brute_limit, gamma_s, solve_snr

EXIT_OK, EXIT_INVALID, EXIT_TOO_LARGE, EXIT_AUDIT = 0, 2, 3, 4


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands ------------------------------------------------------------------


def cmd_analyze(args) -> int:
    G = read_graph(args.graph)
    P = strong_profile(G)
    doc = {"order": fmt(order(G)), "size": fmt(size(G)), **profile_to_doc(P)}
    if args.dot == "-":
        _emit(to_dot(G, P), args.out)
        return EXIT_OK
    if args.dot:
        Path(args.dot).write_text(to_dot(G, P))
    _emit(dumps(doc), args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    G = read_graph(args.graph)
    P = strong_profile(G)
    if args.which == "gamma-s":
        cap = GAMMA_S_LIMIT if args.limit is None else min(args.limit, GAMMA_S_LIMIT)
        if len(G) > cap:
            raise TooLarge(f"gamma-s enumeration is limited to {cap} vertices, got {len(G)}")
        res = gamma_s(G, P)
    else:
        res = solve_snr(G, P, brute=args.brute, limit=args.limit)
    _emit(dumps(result_to_doc(res, G)), args.out)
    return EXIT_OK


def _load_family_spec(arg: str) -> dict:
    text = arg if arg.lstrip().startswith("{") else None
    if text is None:
        try:
            text = Path(arg).read_text()
        except OSError as exc:
            raise BadSpec(f"cannot read family spec {arg}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadSpec(f"family spec is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "family" not in doc or "sigmas" not in doc:
        raise BadSpec('family spec needs "family" and "sigmas"')
    return doc


def family_report(doc: dict) -> tuple[FuzzyGraph, dict, dict]:
    """Build the family graph and evaluate every closed form that applies to it.

    Returns ``(graph, values, anchors)``; values are exact strings.
    """
    fam, sig, mus = doc["family"], doc["sigmas"], doc.get("mus", [])
    values: dict = {}
    anchors: dict = {}

    def put(key, value, anchor):
        values[key] = fmt(value) if not isinstance(value, (str, bool, list, dict)) else value
        anchors[key] = anchor

    if fam == "complete":
        G = make_complete(sig)
        P = strong_profile(G)
        put("gamma_snr_complete", gamma_snr_complete(G, P), "complete graph: 2 min mu_s")
        put("gamma_snr_universal", gamma_snr_universal(G, P),
            "strong-universal vertex: 2 min mu_s over such vertices")
    elif fam == "bipartite":
        if not (isinstance(sig, list) and len(sig) == 2 and all(isinstance(s, list) for s in sig)):
            raise BadSpec('bipartite "sigmas" must be [[x sides...], [y sides...]]')
        G = make_complete_bipartite(sig[0], sig[1])
        P = strong_profile(G)
        put("gamma_snr_bipartite", gamma_snr_bipartite(G, P), "complete bipartite closed form")
        put("bipartite_case", bipartite_case(G, P), "side-size case of the closed form")
    elif fam == "cycle":
        G = make_cycle(sig, mus)
        P = strong_profile(G)
        C = cycle_profile(G, P)
        put("is_strong_cycle", C.is_strong, "every cycle edge is strong")
        if C.is_strong:
            put("cycle_upper_bound", cycle_upper_bound(C), "(1 - k/n)(q - (mu_max - mu_min))")
            put("pattern_weights",
                [fmt(cycle_pattern_labelings(C, m).weight) for m in range(1, C.n + 1)],
                "weights of the periodic labelings f_1 .. f_n")
            chk = cycle_mus_sum_check(C)
            put("mu_s_sum", chk.total, "sum of mu_s over the cycle")
            put("mu_s_sum_bound", chk.bound, "q - (mu_max - mu_min)")
            put("mu_s_sum_equality", chk.equality, "equality iff the weights form a valley")
            if C.residue:
                put("extremal_condition", cycle_extremal_condition(C),
                    "at least n - 1 minimum edges iff the bound is attained")
    elif fam == "path":
        G = make_path(sig, mus)
        P = strong_profile(G)
        Q = path_profile(G, P)
        b = path_upper_bound(Q)
        put("path_upper_bound", b.value, "2/3 (q + mu_min + mu_max), proven for n >= 6")
        put("path_bound_in_hypothesis", b.in_hypothesis, "n >= 6")
        if Q.n >= 3:
            chk = path_mus_sum_check(Q)
            put("mu_s_sum", chk.total, "sum of mu_s along the path")
            put("mu_s_sum_bound", chk.bound, "q + mu_min")
            put("mu_s_sum_equality", chk.equality, "equality iff the weights dip then rise to the maximum")
        put("extremal_conditions", path_extremal_conditions(Q),
            "necessary conditions for attaining the path bound")
    else:
        raise BadSpec(f"unknown family {fam!r}; expected complete, bipartite, cycle or path")

    put("gamma_snr", solve_snr(G, P).value, "exact optimum from the branch-and-bound solver")
    return G, values, anchors


def cmd_family(args) -> int:
    G, values, anchors = family_report(_load_family_spec(args.spec))
    if args.out:
        write_graph(G, args.out)
    doc = {"graph": graph_to_doc(G), **values, "anchors": anchors}
    sys.stdout.write(dumps(doc))
    return EXIT_OK


def cmd_audit(args) -> int:
    limit = brute_limit(args.limit)
    instances = []
    if args.random:
        spec = parse_genspec(" ".join(args.random), seed=args.seed)
        for i in range(args.count):
            s = spec.seed + i
            instances.append((f"seed-{s}", random_graph(spec.with_seed(s)), {"seed": s}))
    elif args.graph:
        instances.append((Path(args.graph).stem, read_graph(args.graph), {"source": args.graph}))
    else:
        raise BadSpec("audit needs a graph file or --random")

    dump_dir = Path(args.out) if args.out else Path(".")
    failures = 0
    for name, G, meta in instances:
        if len(G) > limit:
            raise TooLarge(f"audit is limited to {limit} vertices, got {len(G)} in {name}")
        instance = {"name": name, **meta, "graph": graph_to_doc(G)}
        report = audit_instance(G, brute=args.brute, instance=instance)
        sys.stdout.write(json.dumps(report_to_doc(report)) + "\n")
        if report.verdict != "pass":
            failures += 1
            dump_dir.mkdir(parents=True, exist_ok=True)
            write_graph(G, dump_dir / f"audit-fail-{name}.json")
    print(f"audit: {len(instances) - failures}/{len(instances)} pass", file=sys.stderr)
    return EXIT_AUDIT if failures else EXIT_OK


def cmd_plan(args) -> int:
    G = read_graph(args.graph)
    P = strong_profile(G)
    plan = build_plan(G, P, solve_snr(G, P, brute=args.brute, limit=args.limit))
    if args.json:
        sys.stdout.write(dumps(plan.to_doc()))
    else:
        sys.stdout.write(plan.render())
    if args.out:
        Path(args.out).write_text(dumps(plan.to_doc()))
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = parse_genspec(" ".join(args.spec), seed=args.seed)
    _emit(dumps(graph_to_doc(random_graph(spec))), args.out)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="snrd", description="Exact strong-neighbors Roman domination on fuzzy graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="strong edges, mu_s, degrees and extrema")
    p.add_argument("graph")
    p.add_argument("--dot", nargs="?", const="-", default=None, metavar="FILE",
                   help="write Graphviz source to FILE, or print it instead of JSON")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("solve", help="exact gamma_s or gamma_snR with a canonical witness")
    p.add_argument("graph")
    p.add_argument("which", choices=("gamma-s", "gamma-snr"))
    p.add_argument("--brute", action="store_true", help="exhaustive labeling search")
    p.add_argument("--limit", type=int, help="vertex cap for exhaustive search")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("family", help="closed forms for complete, bipartite, cycle and path graphs")
    p.add_argument("spec", help="family spec JSON file or inline JSON object")
    p.add_argument("--out", help="also write the constructed graph here")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("audit", help="check every bound and structure claim on instances")
    p.add_argument("graph", nargs="?")
    p.add_argument("--random", nargs="+", metavar="KEY=VALUE",
                   help="generator spec such as n=8 p=0.5 D=20")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int)
    p.add_argument("--brute", action="store_true", help="solve with brute force instead")
    p.add_argument("--limit", type=int)
    p.add_argument("--out", help="directory for failing instances (default: .)")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("plan", help="relay / independent / dependent sensor plan")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true", help="print the JSON plan instead of text")
    p.add_argument("--brute", action="store_true")
    p.add_argument("--limit", type=int)
    p.add_argument("--out", help="also write the JSON plan here")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("gen", help="seeded random graph")
    p.add_argument("spec", nargs="+", metavar="KEY=VALUE",
                   help="n=.. p=.. D=.. topology=general|cycle|path|complete|bipartite")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"snrd: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except TheoremViolation as exc:
        print(f"snrd: {exc}", file=sys.stderr)
        return EXIT_AUDIT
    except SnrdError as exc:
        print(f"snrd: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
