"""Command line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input,
3 an exact identity broke inside the library (a witness goes to stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from lltlab import acceptance
from lltlab.cumulant import cumulant_of_graph, verify_forest_identity, verify_moebius_consistency
from lltlab.errors import IdentityViolation, LLTLabError
from lltlab.lltgraph import (
    LEMMA_3_2_CASES,
    LLTGraph,
    MeltingLollipop,
    SimpleGraph,
    check_lemma_3_2,
    llt_of_graph,
    melting_lollipop_graph,
    underlying_simple_graph,
)
from lltlab.report import combine
from lltlab.shapes import llt_of_shapes, parse_sequence
from lltlab.symfunc import schur_to_json, to_schur_basis
from lltlab.theorem import sweep, verify_corollary_1_3, verify_schur_positivity, verify_theorem_1_2
from lltlab.treebij import (
    LEMMA_4_5_CASES,
    LabeledTree,
    SchroderPath,
    admissible_positions,
    canonical_drawing,
    check_lemma_4_5,
    diagonal_labels,
    matrix_tree_count,
    nu,
    parking_functions,
    path_decomposition,
    schroder_paths,
    schroder_to_graph,
    schroder_to_strips,
    spanning_trees,
    tree_to_schroder,
)


def default_seed() -> int:
    return int(os.environ.get("LLT_LAB_SEED", "0"))


def _load_json(text: str):
    """Accept inline JSON or a path to a JSON file."""
    stripped = text.strip()
    if stripped[:1] in "[{":
        return json.loads(stripped)
    return json.loads(Path(text).read_text())


def _load_graph(text: str):
    data = _load_json(text)
    if isinstance(data, dict) and "edges" in data:
        return SimpleGraph(data["n"], [tuple(e) for e in data["edges"]])
    return LLTGraph.from_json(data)


_FORMAT = {"mode": "json"}


def _emit(obj) -> None:
    if _FORMAT["mode"] == "text":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(json.dumps(obj, sort_keys=True))


def _emit_reports(reports, timing: bool) -> int:
    for r in reports:
        print(r.line() if _FORMAT["mode"] == "text" else r.to_json(timing=timing))
    return 0 if all(r.holds for r in reports) else 1


# -- subcommands ------------------------------------------------------------


def cmd_llt(args) -> int:
    if args.source == "shapes":
        seq = parse_sequence(args.object)
        n = args.vars or seq.size
        _emit(llt_of_shapes(seq, n).to_json())
    else:
        g = _load_graph(args.object)
        n = args.vars or g.n
        _emit(llt_of_graph(g, n).to_json())
    return 0


def cmd_cumulant(args) -> int:
    g = _load_graph(args.graph)
    n = args.vars or g.n
    k = cumulant_of_graph(g, n, args.method)
    out = {"cumulant": k.to_json()}
    if args.schur:
        out["schur"] = schur_to_json(to_schur_basis(k))
    _emit(out)
    return 0


def cmd_lollipop(args) -> int:
    p = MeltingLollipop(args.l, args.m, args.k)
    g = melting_lollipop_graph(p)
    n = args.vars or p.size
    if args.verify:
        return _emit_reports([verify_theorem_1_2(p, n)], not args.no_timing)
    if args.schur:
        return _emit_reports([verify_schur_positivity(g, n)], not args.no_timing)
    _emit(g.to_json())
    return 0


def cmd_trees(args) -> int:
    g = _load_graph(args.graph)
    sg = g if isinstance(g, SimpleGraph) else underlying_simple_graph(g)
    trees = [t.to_json() for t in spanning_trees(sg)]
    _emit({"count": len(trees), "matrix_tree": matrix_tree_count(sg), "trees": trees})
    return 0


def cmd_nu(args) -> int:
    edges = _load_json(args.tree)
    t = LabeledTree.from_edges(edges, args.vertices)
    plane = canonical_drawing(t)
    _emit({
        "paths": path_decomposition(plane),
        "strips": str(nu(plane)),
        "diagonal_labels": diagonal_labels(plane),
        "schroder": tree_to_schroder(plane).steps,
    })
    return 0


def cmd_mu(args) -> int:
    p = SchroderPath(args.path)
    _emit({"strips": str(schroder_to_strips(p)), "graph": schroder_to_graph(p).to_json()})
    return 0


def cmd_parking(args) -> int:
    pfs = parking_functions(args.m)
    _emit({"count": len(pfs), "functions": [list(f) for f in pfs]})
    return 0


def cmd_verify(args) -> int:
    timing = not args.no_timing
    what = args.what
    if what == "theorem":
        p = MeltingLollipop(args.l, args.m, args.k)
        return _emit_reports([verify_theorem_1_2(p, args.vars or p.size)], timing)
    if what == "corollary":
        ms = [args.m] if args.max_m is None else range(1, args.max_m + 1)
        return _emit_reports([verify_corollary_1_3(m, args.vars or m) for m in ms], timing)
    if what == "moebius":
        g = _load_graph(args.graph) if args.graph else melting_lollipop_graph(MeltingLollipop(args.l, args.m, args.k))
        return _emit_reports([verify_moebius_consistency(g, args.vars or g.n)], timing)
    if what == "forest-identity":
        p = MeltingLollipop(args.l, args.m, args.k)
        return _emit_reports([verify_forest_identity(p, args.vars or p.size)], timing)
    if what == "schur":
        g = _load_graph(args.graph) if args.graph else melting_lollipop_graph(MeltingLollipop(args.l, args.m, args.k))
        return _emit_reports([verify_schur_positivity(g, args.vars or g.n)], timing)
    if what == "lemma-3-2":
        cases = [args.case] if args.case else LEMMA_3_2_CASES
        seed = default_seed() if args.seed is None else args.seed
        return _emit_reports([check_lemma_3_2(c, args.vars, args.trials, seed) for c in cases], timing)
    if what == "lemma-4-5":
        cases = [args.case] if args.case else LEMMA_4_5_CASES
        if args.path:
            p = SchroderPath(args.path)
            positions = [args.position] if args.position is not None else None
            reports = [check_lemma_4_5(c, p, pos, args.vars)
                       for c in cases for pos in (positions or admissible_positions(c, p))]
        else:
            reports = [check_lemma_4_5(c, p, pos, args.vars)
                       for m in range(1, args.max_length + 1) for p in schroder_paths(m)
                       for c in cases for pos in admissible_positions(c, p)]
        return _emit_reports(reports, timing)
    if what == "bijections":
        import time

        started = time.perf_counter()
        return _emit_reports([combine("bijections", {}, acceptance.bijection_reports(), started)], timing)
    raise AssertionError(what)


def cmd_acceptance(args) -> int:
    results = acceptance.run(args.criteria or None)
    if _FORMAT["mode"] == "text":
        for k, r in results:
            print(f"[{'PASS' if r.holds else 'FAIL'}] criterion {k}: {acceptance.DESCRIPTIONS[k]} ({r.elapsed:.1f}s)")
        return 0 if all(r.holds for _, r in results) else 1
    return _emit_reports([r for _, r in results], not args.no_timing)


def cmd_sweep(args) -> int:
    return _emit_reports(sweep(args.max_total, args.jobs), not args.no_timing)


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lltlab", description="Exact LLT polynomials and their cumulants.")
    parser.add_argument("--format", choices=["json", "text"], default="json", help="output mode (default: json)")
    sub = parser.add_subparsers(dest="command", required=True)

    def vars_flag(p):
        p.add_argument("--vars", type=int, default=None, help="number of variables (default: degree)")

    def timing_flag(p):
        p.add_argument("--no-timing", action="store_true", help="omit elapsed times for byte-stable output")

    def lollipop_flags(p, required=True):
        p.add_argument("--l", type=int, required=required, default=0)
        p.add_argument("--m", type=int, required=required, default=1)
        p.add_argument("--k", type=int, required=required, default=0)

    p = sub.add_parser("llt", help="LLT polynomial of shapes or of a graph")
    p.add_argument("source", choices=["shapes", "graph"])
    p.add_argument("object", help='shape sequence like "[(3,2)/(1),(1,1)]", or graph JSON / file')
    vars_flag(p)
    p.set_defaults(func=cmd_llt)

    p = sub.add_parser("cumulant", help="LLT cumulant of a graph")
    p.add_argument("graph")
    p.add_argument("--method", choices=["closed", "recursive"], default="closed")
    p.add_argument("--schur", action="store_true", help="also print the Schur expansion")
    vars_flag(p)
    p.set_defaults(func=cmd_cumulant)

    p = sub.add_parser("lollipop", help="melting lollipop graph")
    lollipop_flags(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--graph", action="store_true", help="print the graph (default)")
    mode.add_argument("--verify", action="store_true", help="check the spanning tree expansion")
    mode.add_argument("--schur", action="store_true", help="check Schur positivity of the cumulant")
    vars_flag(p)
    timing_flag(p)
    p.set_defaults(func=cmd_lollipop)

    p = sub.add_parser("trees", help="spanning trees of a graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("nu", help="strip sequence of a labelled tree")
    p.add_argument("tree", help="JSON edge list, e.g. [[1,3],[1,5]]")
    p.add_argument("--vertices", type=int, default=None)
    p.set_defaults(func=cmd_nu)

    p = sub.add_parser("mu", help="vertical strips of a Schroeder path")
    p.add_argument("path")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("parking", help="list parking functions")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_parking)

    p = sub.add_parser("verify", help="run a verifier")
    p.add_argument("what", choices=["theorem", "corollary", "moebius", "forest-identity", "schur", "lemma-3-2",
                                    "lemma-4-5", "bijections"])
    lollipop_flags(p, required=False)
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("--graph", default=None)
    p.add_argument("--case", default=None)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=None, help="default: $LLT_LAB_SEED or 0")
    p.add_argument("--path", default=None)
    p.add_argument("--position", type=int, default=None)
    p.add_argument("--max-length", type=int, default=5)
    vars_flag(p)
    timing_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="all lollipop checks up to a size")
    p.add_argument("--max-total", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    timing_flag(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("acceptance", help="run acceptance criteria (all by default)")
    p.add_argument("criteria", type=int, nargs="*", choices=sorted(acceptance.CRITERIA), metavar="N")
    timing_flag(p)
    p.set_defaults(func=cmd_acceptance)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _FORMAT["mode"] = args.format
    try:
        return args.func(args)
    except IdentityViolation as exc:
        witness = {"error": type(exc).__name__, "message": str(exc)}
        if getattr(exc, "remainder", None) is not None:
            witness["remainder"] = exc.remainder
        print(json.dumps(witness, sort_keys=True), file=sys.stderr)
        return 3
    except (LLTLabError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"lltlab: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
