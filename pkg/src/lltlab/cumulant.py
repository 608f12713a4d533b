"""Set partitions, LLT cumulants, and the identities they satisfy."""

from __future__ import annotations

import time
from functools import lru_cache
from math import factorial
from typing import Iterator

from lltlab.errors import NotDivisible
from lltlab.lltgraph import (
    LLTGraph,
    MeltingLollipop,
    SimpleGraph,
    induced_subgraph,
    llt_of_graph,
    melting_lollipop_graph,
    underlying_simple_graph,
)
from lltlab.qpoly import Q, Q_MINUS_1, exact_div_qminus1_pow
from lltlab.report import VerificationReport, compare
from lltlab.symfunc import SymPoly

SetPartition = tuple[tuple[int, ...], ...]


def set_partitions_of(elements: tuple[int, ...]) -> Iterator[SetPartition]:
    """Set partitions of ``elements``; blocks are sorted and listed by their minimum."""
    if not elements:
        yield ()
        return
    first, rest = elements[0], elements[1:]
    k = len(rest)
    # choose the other members of the block containing ``first``
    for mask in range(1 << k):
        block = (first,) + tuple(rest[b] for b in range(k) if mask >> b & 1)
        remaining = tuple(rest[b] for b in range(k) if not mask >> b & 1)
        for tail in set_partitions_of(remaining):
            yield (block,) + tail


def set_partitions(m: int) -> Iterator[SetPartition]:
    if m < 1:
        raise ValueError("m must be positive")
    return set_partitions_of(tuple(range(1, m + 1)))


def bell(m: int) -> int:
    """Bell numbers via the Bell triangle."""
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


# -- cumulants --------------------------------------------------------------


def _block_llt(g: LLTGraph, block: tuple[int, ...], n: int) -> SymPoly:
    return llt_of_graph(induced_subgraph(g, block), n)


def cumulant_numerator(g: LLTGraph, n: int, sign: str = "blocks") -> SymPoly:
    """The alternating sum over set partitions before division by (q - 1)^(m - 1).

    ``sign="blocks"`` weights a partition with k blocks by (-1)^(k-1) (k-1)!.
    ``sign="printed"`` instead multiplies (-1)^(|B|-1) (|B|-1)! over its blocks B.
    """
    if sign not in ("blocks", "printed"):
        raise ValueError(f"unknown sign convention {sign!r}")
    m = g.n
    by_blocks: dict[int, SymPoly] = {}
    printed = SymPoly.zero(n)

    # walk the partition tree, carrying the running product of block polynomials
    def rec(remaining: tuple[int, ...], k: int, acc: SymPoly, weight: int):
        nonlocal printed
        if not remaining:
            if sign == "blocks":
                by_blocks[k] = by_blocks[k] + acc if k in by_blocks else acc
            else:
                printed = printed + acc.scale(weight)
            return
        first, rest = remaining[0], remaining[1:]
        r = len(rest)
        for mask in range(1 << r):
            block = (first,) + tuple(rest[b] for b in range(r) if mask >> b & 1)
            left = tuple(rest[b] for b in range(r) if not mask >> b & 1)
            w = weight * (-1) ** (len(block) - 1) * factorial(len(block) - 1)
            rec(left, k + 1, acc * _block_llt(g, block, n), w)

    rec(tuple(range(1, m + 1)), 0, SymPoly.one(n), 1)
    if sign == "printed":
        return printed
    total = SymPoly.zero(n)
    for k, part in by_blocks.items():
        total = total + part.scale((-1) ** (k - 1) * factorial(k - 1))
    return total


def _divide(num: SymPoly, k: int, context: str) -> SymPoly:
    out = {}
    for lam, c in num.terms.items():
        try:
            quot = exact_div_qminus1_pow(c, k)
        except NotDivisible as exc:
            raise NotDivisible(f"{context}: coefficient of m{list(lam)} {exc}", remainder=exc.remainder) from None
        if quot:
            out[lam] = quot
    return SymPoly(num.num_vars, out)


@lru_cache(maxsize=None)
def _closed(g: LLTGraph, n: int) -> SymPoly:
    return _divide(cumulant_numerator(g, n), g.n - 1, f"cumulant of {g.to_json()}")


@lru_cache(maxsize=None)
def _recursive(g: LLTGraph, n: int) -> SymPoly:
    """Solve LLT(S) = sum over partitions of (q-1)^(|S| - #blocks) prod kappa(B) for kappa(S)."""
    m = g.n
    if m == 1:
        return llt_of_graph(g, n)
    rest = SymPoly.zero(n)
    for part in set_partitions(m):
        if len(part) == 1:
            continue
        term = SymPoly.one(n).scale(Q_MINUS_1 ** (m - len(part)))
        for block in part:
            term = term * _recursive(induced_subgraph(g, block), n)
        rest = rest + term
    return _divide(llt_of_graph(g, n) - rest, m - 1, f"recursive cumulant of {g.to_json()}")


def cumulant_of_graph(g: LLTGraph, n: int, method: str = "closed") -> SymPoly:
    """LLT cumulant of ``g`` in ``n`` variables.

    ``closed`` evaluates the alternating set partition sum and divides by
    (q - 1)^(m - 1); ``recursive`` inverts the expansion of LLT(g) in terms of
    cumulants of induced subgraphs.  Both raise NotDivisible if an exact
    division fails.
    """
    if g.n == 0:
        raise ValueError("cumulant of the empty graph")
    if method == "closed":
        return _closed(g, n)
    if method == "recursive":
        return _recursive(g, n)
    raise ValueError(f"unknown method {method!r}")


def printed_sign_comparison(n: int = 2) -> dict:
    """Both sign conventions on the two-vertex double edge.

    The block-count weight gives m_11 there; the per-block weight gives the
    negated numerator, which is not Schur positive.
    """
    g = LLTGraph(2, ed={(1, 2)})
    out = {}
    for sign in ("blocks", "printed"):
        num = cumulant_numerator(g, n, sign)
        out[sign] = _divide(num, 1, sign)
    return out


def verify_moebius_consistency(g: LLTGraph, n: int) -> VerificationReport:
    """LLT(g) equals the sum over set partitions of (q-1)^(m - #blocks) times the block cumulants."""
    started = time.perf_counter()
    m = g.n
    total = SymPoly.zero(n)
    ledger = []
    for part in set_partitions(m):
        term = SymPoly.one(n).scale(Q_MINUS_1 ** (m - len(part)))
        for block in part:
            term = term * cumulant_of_graph(induced_subgraph(g, block), n)
        ledger.append({"partition": [list(b) for b in part], "term": term.to_json()})
        total = total + term
    return compare("moebius_consistency", {"graph": g.to_json(), "n": n}, llt_of_graph(g, n), total, started,
                   partitions=ledger)


def verify_disconnected_vanishing(g: LLTGraph, n: int) -> VerificationReport:
    started = time.perf_counter()
    if underlying_simple_graph(g).is_connected():
        raise ValueError("graph is connected; vanishing is only claimed for disconnected graphs")
    return compare("disconnected_vanishing", {"graph": g.to_json(), "n": n}, cumulant_of_graph(g, n),
                   SymPoly.zero(n), started)


# -- forests ----------------------------------------------------------------


def spanning_forests(sg: SimpleGraph) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every acyclic edge subset, each once, by include/exclude over the sorted edges."""
    edges = sg.sorted_edges()
    chosen: list[tuple[int, int]] = []

    def find(parent: list[int], v: int) -> int:
        while parent[v] != v:
            v = parent[v]
        return v

    def rec(k: int, parent: list[int]):
        if k == len(edges):
            yield tuple(chosen)
            return
        u, v = edges[k]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            nxt = parent[:]
            nxt[rv] = ru
            chosen.append((u, v))
            yield from rec(k + 1, nxt)
            chosen.pop()
        yield from rec(k + 1, parent)

    yield from rec(0, list(range(sg.n + 1)))


def forest_components(n: int, forest) -> list[tuple[list[int], list[tuple[int, int]]]]:
    """Split a forest on 1..n into (vertices, edges) per tree, ordered by smallest vertex."""
    comps = SimpleGraph(n, forest).components()
    where = {v: i for i, c in enumerate(comps) for v in c}
    edges: list[list[tuple[int, int]]] = [[] for _ in comps]
    for u, v in forest:
        edges[where[u]].append((u, v))
    return [(c, e) for c, e in zip(comps, edges)]


def forest_count_by_trees(sg: SimpleGraph) -> int:
    """Number of spanning forests: sum over vertex partitions of products of tree counts of the blocks."""
    from lltlab.treebij import matrix_tree_count

    total = 0
    for part in set_partitions_of(tuple(range(1, sg.n + 1))):
        prod = 1
        for block in part:
            idx = {v: i for i, v in enumerate(block, 1)}
            sub = SimpleGraph(len(block), [(idx[u], idx[v]) for u, v in sg.edges if u in idx and v in idx])
            prod *= matrix_tree_count(sub)
            if not prod:
                break
        total += prod
    return total


def verify_forest_identity(p: MeltingLollipop, n: int) -> VerificationReport:
    """LLT(G)(q+1) = sum over spanning forests F of q^(|V| - #F) LLT(nu(F))(q+1)."""
    from lltlab.shapes import shapes_to_graph
    from lltlab.treebij import draw_forest_component, nu

    started = time.perf_counter()
    g = melting_lollipop_graph(p)
    size = g.n
    lhs = llt_of_graph(g, n).shift_q()
    grouped: dict[tuple, int] = {}
    count = 0
    for forest in spanning_forests(underlying_simple_graph(g)):
        count += 1
        comps = forest_components(size, forest)
        key = tuple(sorted((nu(draw_forest_component(vs, es)) for vs, es in comps), key=str))
        grouped[key] = grouped.get(key, 0) + 1
    rhs = SymPoly.zero(n)
    for key, mult in grouped.items():
        term = SymPoly.one(n)
        for seq in key:
            term = term * llt_of_graph(shapes_to_graph(seq), n)
        rhs = rhs + term.shift_q().scale(Q ** (size - len(key)) * mult)
    return compare("forest_identity", {"l": p.l, "m": p.m, "k": p.k, "n": n}, lhs, rhs, started, forests=count)
