"""The ten acceptance checks, each returning one aggregated VerificationReport."""

from __future__ import annotations

import random
import time
from itertools import combinations

from lltlab.cumulant import cumulant_of_graph, verify_disconnected_vanishing, verify_forest_identity
from lltlab.errors import NotDivisible
from lltlab.lltgraph import (
    LEMMA_3_2_CASES,
    LLTGraph,
    check_lemma_3_2,
    complete_graph,
    disjoint_union,
    llt_of_graph,
    melting_lollipop_graph,
    underlying_simple_graph,
)
from lltlab.report import VerificationReport, combine, compare
from lltlab.shapes import ShapeSequence, llt_of_shapes, parse_sequence, shapes_to_graph
from lltlab.theorem import lollipop_parameters, verify_corollary_1_3, verify_schur_positivity, verify_theorem_1_2
from lltlab.treebij import (
    LEMMA_4_5_CASES,
    LabeledTree,
    SchroderPath,
    admissible_positions,
    canonical_drawing,
    check_lemma_4_5,
    diagonal_labels,
    dyck_paths,
    dyck_to_schroder,
    graph_to_schroder,
    nu,
    parking_functions,
    path_decomposition,
    plane_trees,
    schroder_paths,
    schroder_to_dyck,
    schroder_to_graph,
    schroder_to_strips,
    spanning_trees,
    tree_to_parking,
    tree_to_schroder,
)

LITTLE_SCHRODER = (1, 3, 11, 45, 197, 903, 4279)
CATALAN = (1, 1, 2, 5, 14, 42, 132, 429)

# the six-vertex example tree with its strips, path, Dyck path and parking function
EXAMPLE_TREE = LabeledTree.from_edges([(1, 3), (1, 5), (1, 6), (5, 2), (5, 4)])
EXAMPLE_PATHS = [[1, 3], [5, 2], [4], [6]]
EXAMPLE_STRIPS = "[(1^3)/(1),(1^2),(1),(1^2)/(1)]"
EXAMPLE_DIAGONAL = [1, 3, 5, 6, 2, 4]
EXAMPLE_SCHRODER = "ndnnedneee"
EXAMPLE_DYCK = "nnneenneee"
EXAMPLE_PARKING = (3, 1, 3, 1, 1)
EXAMPLE_SHAPES = "[(3,2)/(1),(1,1)]"


def _fact(claim: str, params: dict, ok: bool, **witness) -> VerificationReport:
    return VerificationReport(claim, params, ok, None if ok else witness or {"value": None})


def criterion_1(max_total: int = 7) -> VerificationReport:
    started = time.perf_counter()
    reports = [verify_theorem_1_2(p, p.size) for p in lollipop_parameters(max_total)]
    return combine("criterion_1", {"max_total": max_total}, reports, started)


def criterion_2(max_m: int = 6) -> VerificationReport:
    started = time.perf_counter()
    reports = [verify_corollary_1_3(m, m) for m in range(1, max_m + 1)]
    return combine("criterion_2", {"max_m": max_m}, reports, started)


def random_unicellular_graphs(count: int, max_vertices: int, seed: int) -> list[LLTGraph]:
    """Graphs of random unicellular sequences, one per Dyck path drawn with a seeded generator."""
    rng = random.Random(seed)
    return [schroder_to_graph(rng.choice(dyck_paths(rng.randint(1, max_vertices)))) for _ in range(count)]


def criterion_3(max_total: int = 5, random_count: int = 50, seed: int = 0) -> VerificationReport:
    started = time.perf_counter()
    graphs = [melting_lollipop_graph(p) for p in lollipop_parameters(max_total)]
    graphs += random_unicellular_graphs(random_count, max_total, seed)
    reports = []
    for g in graphs:
        t0 = time.perf_counter()
        params = {"graph": g.to_json(), "n": g.n}
        try:
            closed = cumulant_of_graph(g, g.n, "closed")
            recursive = cumulant_of_graph(g, g.n, "recursive")
        except NotDivisible as exc:
            reports.append(_fact("cumulant_routes", params, False, error=str(exc), remainder=exc.remainder))
            continue
        reports.append(compare("cumulant_routes", params, closed, recursive, t0))
    return combine("criterion_3", {"max_total": max_total, "random": random_count, "seed": seed}, reports, started)


def disconnected_corpus(max_vertices: int = 5, seed: int = 0, random_count: int = 40) -> list[LLTGraph]:
    """Disconnected unicellular graphs: split lollipops, split Dyck path graphs and disjoint unions.

    The corpus stays inside graphs of unicellular sequences, whose coloring
    sums are symmetric.
    """
    out: list[LLTGraph] = []
    for p in lollipop_parameters(max_vertices):
        g = melting_lollipop_graph(p)
        if not underlying_simple_graph(g).is_connected():
            out.append(g)
    connected = []
    for m in range(1, max_vertices + 1):
        for d in dyck_paths(m):
            g = schroder_to_graph(d)
            (connected if underlying_simple_graph(g).is_connected() else out).append(g)
    for a, b in combinations(connected, 2):
        if a.n + b.n <= max_vertices:
            out.append(disjoint_union(a, b))
            out.append(disjoint_union(b, a))
    rng = random.Random(seed)
    for _ in range(random_count):
        parts = []
        left = max_vertices
        while left > 0 and (len(parts) < 2 or rng.random() < 0.5):
            size = rng.randint(1, left)
            parts.append(rng.choice([g for g in connected if g.n == size]))
            left -= size
        if len(parts) >= 2:
            out.append(disjoint_union(*parts))
    return list(dict.fromkeys(out))


def criterion_4(max_vertices: int = 5) -> VerificationReport:
    started = time.perf_counter()
    reports = [verify_disconnected_vanishing(g, g.n) for g in disconnected_corpus(max_vertices)]
    return combine("criterion_4", {"max_vertices": max_vertices}, reports, started)


def criterion_5(max_total: int = 6) -> VerificationReport:
    started = time.perf_counter()
    reports = [verify_schur_positivity(melting_lollipop_graph(p), p.size) for p in lollipop_parameters(max_total)]
    return combine("criterion_5", {"max_total": max_total}, reports, started)


def criterion_6(max_total: int = 6) -> VerificationReport:
    started = time.perf_counter()
    reports = [verify_forest_identity(p, p.size) for p in lollipop_parameters(max_total)]
    return combine("criterion_6", {"max_total": max_total}, reports, started)


def criterion_7(trials: int = 20, seed: int = 0) -> VerificationReport:
    started = time.perf_counter()
    reports = [check_lemma_3_2(case, None, trials, seed) for case in LEMMA_3_2_CASES]
    return combine("criterion_7", {"trials": trials, "seed": seed}, reports, started)


def criterion_8(max_m: int = 5) -> VerificationReport:
    started = time.perf_counter()
    reports = []
    positions = {case: 0 for case in LEMMA_4_5_CASES}
    for m in range(1, max_m + 1):
        paths = schroder_paths(m)
        reports.append(_fact("schroder_count", {"m": m}, len(paths) == LITTLE_SCHRODER[m - 1],
                             found=len(paths), expected=LITTLE_SCHRODER[m - 1]))
        for p in paths:
            for case in LEMMA_4_5_CASES:
                for pos in admissible_positions(case, p):
                    positions[case] += 1
                    reports.append(check_lemma_4_5(case, p, pos, m))
    for case, count in positions.items():
        reports.append(_fact("lemma_4_5_positions", {"case": case}, count > 0, found=count))
    return combine("criterion_8", {"max_m": max_m}, reports, started, positions=positions)


def bijection_reports(max_mu: int = 6, max_tree: int = 7, max_parking: int = 6) -> list[VerificationReport]:
    reports = []
    for m in range(1, max_mu + 1):
        paths = schroder_paths(m)
        graphs = [schroder_to_graph(p) for p in paths]
        back_ok = [p.steps for p, g in zip(paths, graphs) if graph_to_schroder(g) != p]
        strips_bad = [p.steps for p, g in zip(paths, graphs) if shapes_to_graph(schroder_to_strips(p)) != g]
        reports.append(_fact("mu_round_trip", {"m": m}, not back_ok and not strips_bad,
                             path_failures=back_ok, strip_failures=strips_bad))
        reports.append(_fact("mu_injective", {"m": m}, len(set(graphs)) == len(paths),
                             distinct=len(set(graphs)), paths=len(paths)))
    for m in range(1, max_tree + 1):
        image = {tree_to_schroder(t).steps for t in plane_trees(m)}
        cond = {p.steps for p in schroder_paths(m) if p.satisfies_tree_conditions()}
        ok = image == cond and len(image) == CATALAN[m - 1] == len(plane_trees(m))
        reports.append(_fact("tree_path_image", {"m": m}, ok, image=len(image), conditions=len(cond),
                             catalan=CATALAN[m - 1], extra=sorted(image - cond), missing=sorted(cond - image)))
        dyck_ok = all(dyck_to_schroder(schroder_to_dyck(SchroderPath(s))).steps == s for s in cond)
        reports.append(_fact("dyck_round_trip", {"m": m}, dyck_ok))
    for m in range(1, max_parking + 1):
        trees = list(spanning_trees(complete_graph(m)))
        images = [tree_to_parking(t) for t in trees]
        pfs = parking_functions(m - 1)
        expected = m ** (m - 2) if m >= 2 else 1
        ok = len(set(images)) == len(trees) == len(pfs) == expected and set(images) == set(pfs)
        reports.append(_fact("tree_parking_injective", {"m": m}, ok, trees=len(trees), distinct=len(set(images)),
                             parking=len(pfs), expected=expected))
    plane = canonical_drawing(EXAMPLE_TREE)
    path = tree_to_schroder(plane)
    example = {
        "paths": (path_decomposition(plane), EXAMPLE_PATHS),
        "strips": (str(nu(plane)), str(parse_sequence(EXAMPLE_STRIPS))),
        "diagonal": (diagonal_labels(plane), EXAMPLE_DIAGONAL),
        "schroder": (path.steps, EXAMPLE_SCHRODER),
        "path_strips": (str(schroder_to_strips(path)), str(parse_sequence(EXAMPLE_STRIPS))),
        "dyck": (schroder_to_dyck(path).steps, EXAMPLE_DYCK),
        "parking": (tree_to_parking(EXAMPLE_TREE), EXAMPLE_PARKING),
    }
    for name, (got, want) in example.items():
        reports.append(_fact(f"example_tree[{name}]", {}, got == want, got=got, expected=want))
    return reports


def criterion_9() -> VerificationReport:
    started = time.perf_counter()
    return combine("criterion_9", {}, bijection_reports(), started)


def cross_corpus(max_tree: int = 6, max_path: int = 5) -> list[ShapeSequence]:
    seqs = {}
    for m in range(1, max_tree + 1):
        for t in plane_trees(m):
            seqs[nu(t)] = None
    for m in range(1, max_path + 1):
        for p in schroder_paths(m):
            seqs[schroder_to_strips(p)] = None
    seqs[parse_sequence(EXAMPLE_SHAPES)] = None
    return list(seqs)


def criterion_10() -> VerificationReport:
    started = time.perf_counter()
    reports = []
    for seq in cross_corpus():
        t0 = time.perf_counter()
        n = seq.size
        reports.append(compare("shapes_vs_graph", {"seq": str(seq), "n": n}, llt_of_shapes(seq, n),
                               llt_of_graph(shapes_to_graph(seq), n), t0))
    return combine("criterion_10", {}, reports, started)


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}

DESCRIPTIONS = {
    1: "lollipop cumulant equals spanning tree sum, l+m <= 7",
    2: "complete graph cumulant equals tree sum and parking sum, m <= 6",
    3: "closed and recursive cumulants agree, exact division",
    4: "cumulants of disconnected graphs vanish",
    5: "lollipop cumulants are Schur positive, l+m <= 6",
    6: "forest expansion after q -> q+1, l+m <= 6",
    7: "local graph relations, standalone and embedded",
    8: "local path relations at every admissible position",
    9: "path, tree, Dyck and parking bijections",
    10: "tableau route equals coloring route",
}


def run(numbers=None) -> list[tuple[int, VerificationReport]]:
    return [(k, CRITERIA[k]()) for k in (numbers or sorted(CRITERIA))]
