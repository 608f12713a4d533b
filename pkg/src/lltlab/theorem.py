"""End-to-end verifiers for lollipop cumulants."""

from __future__ import annotations

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from lltlab.cumulant import cumulant_of_graph, verify_forest_identity, verify_moebius_consistency
from lltlab.lltgraph import (
    LLTGraph,
    MeltingLollipop,
    complete_graph,
    melting_lollipop_graph,
    underlying_simple_graph,
)
from lltlab.report import VerificationReport, combine, compare
from lltlab.shapes import ShapeSequence, llt_of_shapes
from lltlab.symfunc import SymPoly, schur_to_json, to_schur_basis
from lltlab.treebij import (
    canonical_drawing,
    matrix_tree_count,
    nu,
    parking_functions,
    parking_strips,
    spanning_trees,
)


def _sum_over(seqs: Counter, n: int) -> SymPoly:
    total = SymPoly.zero(n)
    for seq, mult in seqs.items():
        total = total + llt_of_shapes(seq, n).scale(mult)
    return total


def tree_sum(g: LLTGraph, n: int) -> tuple[SymPoly, int]:
    """Sum of LLT(nu(T)) over spanning trees T of the underlying graph; also returns the tree count."""
    seqs: Counter[ShapeSequence] = Counter()
    count = 0
    for t in spanning_trees(underlying_simple_graph(g)):
        seqs[nu(canonical_drawing(t))] += 1
        count += 1
    return _sum_over(seqs, n), count


def verify_theorem_1_2(p: MeltingLollipop, n: int | None = None) -> VerificationReport:
    """Cumulant of the lollipop (coloring route) against the spanning tree sum (tableau route)."""
    started = time.perf_counter()
    n = p.size if n is None else n
    g = melting_lollipop_graph(p)
    lhs = cumulant_of_graph(g, n)
    rhs, count = tree_sum(g, n)
    return compare("theorem_1_2", {"l": p.l, "m": p.m, "k": p.k, "n": n}, lhs, rhs, started, spanning_trees=count)


def verify_corollary_1_3(m: int, n: int | None = None) -> VerificationReport:
    """kappa(K_m) = sum over Cayley trees = sum over parking functions on m - 1 cars."""
    started = time.perf_counter()
    n = m if n is None else n
    g = melting_lollipop_graph(MeltingLollipop(0, m, 0))
    kappa = cumulant_of_graph(g, n)
    trees, tree_count = tree_sum(g, n)
    seqs: Counter[ShapeSequence] = Counter(parking_strips(f) for f in parking_functions(m - 1))
    parking = _sum_over(seqs, n)
    pf_count = sum(seqs.values())
    det_count = matrix_tree_count(complete_graph(m))
    params = {"m": m, "n": n}
    reports = [
        compare("corollary_1_3[trees]", params, kappa, trees, started),
        compare("corollary_1_3[parking]", params, trees, parking, started),
    ]
    counts = {"cayley_trees": tree_count, "parking_functions": pf_count, "matrix_tree": det_count,
              "expected": m ** (m - 2) if m >= 2 else 1}
    if len(set(counts.values())) != 1:
        reports.append(VerificationReport("corollary_1_3[counts]", params, False, {"counts": counts}))
    return combine("corollary_1_3", params, reports, started, **counts)


def verify_schur_positivity(g: LLTGraph, n: int | None = None) -> VerificationReport:
    started = time.perf_counter()
    n = g.n if n is None else n
    coeffs = to_schur_basis(cumulant_of_graph(g, n))
    bad = {lam: c for lam, c in coeffs.items() if not c.is_nonneg()}
    params = {"graph": g.to_json(), "n": n}
    witness = {"negative": schur_to_json(bad)} if bad else None
    return VerificationReport("schur_positivity", params, not bad, witness, time.perf_counter() - started,
                              {"schur": schur_to_json(coeffs)})


def lollipop_parameters(max_total: int) -> list[MeltingLollipop]:
    """Every (l, m, k) with l + m <= max_total, m >= 1 and 0 <= k < m, ordered by (l + m, l, m, k)."""
    out = []
    for total in range(1, max_total + 1):
        for l in range(total - 1, -1, -1):
            m = total - l
            for k in range(m):
                out.append(MeltingLollipop(l, m, k))
    return sorted(out, key=lambda p: (p.size, p.l, p.m, p.k))


def _sweep_case(p: MeltingLollipop) -> list[VerificationReport]:
    n = p.size
    g = melting_lollipop_graph(p)
    return [
        verify_theorem_1_2(p, n),
        verify_forest_identity(p, n),
        verify_moebius_consistency(g, n),
        verify_schur_positivity(g, n),
    ]


def sweep(max_total: int, jobs: int | None = None) -> list[VerificationReport]:
    """All four checks on every melting lollipop up to ``max_total`` vertices.

    Cases run in a process pool when ``jobs`` > 1; reports come back in
    parameter order regardless.
    """
    if max_total < 1:
        raise ValueError("max_total must be positive")
    params = lollipop_parameters(max_total)
    jobs = jobs or os.cpu_count() or 1
    if jobs <= 1 or len(params) == 1:
        chunks = [_sweep_case(p) for p in params]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_sweep_case, params))
    return [r for chunk in chunks for r in chunk]
