"""LLT graphs and their coloring generating functions.

An LLT graph on vertices ``1..n`` carries three kinds of directed edges.  For a
coloring ``f`` each edge ``(u, v)`` contributes a factor

* type I   (``e1``): ``[f(u) > f(v)]``
* type II  (``e2``): ``[f(u) >= f(v)]``
* double   (``ed``): ``q`` if ``f(u) > f(v)`` else ``1``

and the LLT polynomial is the sum over colorings of the product of these
factors times ``x_f``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable

from lltlab.errors import EmptySubset
from lltlab.qpoly import Q, Q_MINUS_1, QPoly
from lltlab.report import VerificationReport, combine, compare
from lltlab.symfunc import Partition, SymPoly, partitions

Edge = tuple[int, int]


def _edge_set(edges: Iterable) -> frozenset[Edge]:
    return frozenset((int(u), int(v)) for u, v in edges)


@dataclass(frozen=True)
class LLTGraph:
    n: int
    e1: frozenset = field(default_factory=frozenset)
    e2: frozenset = field(default_factory=frozenset)
    ed: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for name in ("e1", "e2", "ed"):
            object.__setattr__(self, name, _edge_set(getattr(self, name)))
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for name in ("e1", "e2", "ed"):
            seen = set()
            for u, v in getattr(self, name):
                if not (1 <= u <= self.n and 1 <= v <= self.n):
                    raise ValueError(f"{name} edge {(u, v)} outside 1..{self.n}")
                if u == v:
                    raise ValueError(f"self-loop {(u, v)} in {name}")
                key = (min(u, v), max(u, v))
                if key in seen:
                    raise ValueError(f"two {name} edges on the pair {key}")
                seen.add(key)
        if (self.e1 & self.e2) or (self.e1 & self.ed) or (self.e2 & self.ed):
            raise ValueError("edge types must be disjoint")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> list[tuple[str, int, int]]:
        return sorted([("e1", u, v) for u, v in self.e1] + [("e2", u, v) for u, v in self.e2]
                      + [("ed", u, v) for u, v in self.ed])

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "e1": sorted([list(e) for e in self.e1]),
            "e2": sorted([list(e) for e in self.e2]),
            "ed": sorted([list(e) for e in self.ed]),
        }

    @classmethod
    def from_json(cls, data: dict) -> "LLTGraph":
        return cls(data["n"], data.get("e1", ()), data.get("e2", ()), data.get("ed", ()))

    def with_edges(self, e1=(), e2=(), ed=()) -> "LLTGraph":
        return LLTGraph(self.n, self.e1 | _edge_set(e1), self.e2 | _edge_set(e2), self.ed | _edge_set(ed))

    def relabel(self, perm: dict[int, int]) -> "LLTGraph":
        """Apply a vertex bijection ``perm`` (old label -> new label)."""
        def move(es):
            return {(perm[u], perm[v]) for u, v in es}
        return LLTGraph(self.n, move(self.e1), move(self.e2), move(self.ed))

    def without_double_edges(self) -> "LLTGraph":
        return LLTGraph(self.n, self.e1, self.e2, ())


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on ``1..n``; edges stored as sorted pairs."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset((min(u, v), max(u, v)) for u, v in self.edges))
        for u, v in self.edges:
            if u == v or not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"bad edge {(u, v)}")

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen, comps = set(), []
        for s in range(1, self.n + 1):
            if s in seen:
                continue
            stack, comp = [s], []
            seen.add(s)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}


def complete_graph(m: int) -> SimpleGraph:
    return SimpleGraph(m, combinations(range(1, m + 1), 2))


# -- the coloring sum ------------------------------------------------------

# comparison codes used by the enumerator; "cur" is the vertex being colored
_GT, _LT, _GE, _LE, _Q_IF_GT, _Q_IF_LT = range(6)


def _vertex_order(g: LLTGraph) -> list[int]:
    """Most-constrained-first ordering: prefer vertices with many hard edges to placed ones."""
    hard: dict[int, set[int]] = {v: set() for v in g.vertices}
    soft: dict[int, set[int]] = {v: set() for v in g.vertices}
    for u, v in g.e1 | g.e2:
        hard[u].add(v)
        hard[v].add(u)
    for u, v in g.ed:
        soft[u].add(v)
        soft[v].add(u)
    order: list[int] = []
    placed: set[int] = set()
    remaining = set(g.vertices)
    while remaining:
        best = max(remaining, key=lambda v: (len(hard[v] & placed), len(hard[v]), len(soft[v] & placed), -v))
        order.append(best)
        placed.add(best)
        remaining.discard(best)
    return order


def _checks(g: LLTGraph, order: list[int]) -> list[tuple[tuple[int, int], ...]]:
    pos = {v: i for i, v in enumerate(order)}
    checks: list[list[tuple[int, int]]] = [[] for _ in order]
    for (u, v), hi, lo in [((u, v), _GT, _LT) for u, v in g.e1] + [((u, v), _GE, _LE) for u, v in g.e2] \
            + [((u, v), _Q_IF_GT, _Q_IF_LT) for u, v in g.ed]:
        pu, pv = pos[u], pos[v]
        if pu > pv:
            checks[pu].append((pv, hi))
        else:
            checks[pv].append((pu, lo))
    return [tuple(c) for c in checks]


def coloring_sum(g: LLTGraph, content: Partition) -> QPoly:
    """Coefficient of x^content in LLT(g): weighted count of colorings with that content."""
    if sum(content) != g.n:
        return QPoly()
    if g.n == 0:
        return QPoly.const(1)
    order = _vertex_order(g)
    checks = _checks(g, order)
    nv = g.n
    ncol = len(content)
    budget = list(content)
    colors = [0] * nv
    counts: dict[int, int] = {}

    def rec(i: int, qexp: int) -> None:
        if i == nv:
            counts[qexp] = counts.get(qexp, 0) + 1
            return
        lo, hi = 0, ncol - 1
        soft = []
        for j, kind in checks[i]:
            c = colors[j]
            if kind == _GT:
                lo = max(lo, c + 1)
            elif kind == _LT:
                hi = min(hi, c - 1)
            elif kind == _GE:
                lo = max(lo, c)
            elif kind == _LE:
                hi = min(hi, c)
            else:
                soft.append((c, kind))
        for col in range(lo, hi + 1):
            if not budget[col]:
                continue
            extra = 0
            for c, kind in soft:
                if (kind == _Q_IF_GT and col > c) or (kind == _Q_IF_LT and col < c):
                    extra += 1
            budget[col] -= 1
            colors[i] = col
            rec(i + 1, qexp + extra)
            budget[col] += 1

    rec(0, 0)
    return QPoly.from_counts(counts)


@lru_cache(maxsize=None)
def llt_of_graph(g: LLTGraph, n: int) -> SymPoly:
    """LLT polynomial of ``g`` in ``n`` variables, as a SymPoly in the monomial basis.

    Only colorings whose content is a partition are enumerated.  This reads
    off every coefficient when the coloring sum is symmetric, which holds for
    graphs built from shape sequences (and their induced subgraphs).  An
    arbitrary LLT graph need not be symmetric; use :func:`coloring_polynomial`
    for those.
    """
    if n < 1:
        raise ValueError("n must be positive")
    terms = {}
    for lam in partitions(g.n, n):
        c = coloring_sum(g, lam)
        if c:
            terms[lam] = c
    return SymPoly._raw(n, terms)


class ColoringPoly:
    """Full coloring generating function: weight vector -> coefficient in Z[q]."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: dict[tuple[int, ...], QPoly]):
        self.num_vars = num_vars
        self.terms = {w: c for w, c in terms.items() if c}

    def __eq__(self, other):
        if not isinstance(other, ColoringPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __add__(self, other: "ColoringPoly") -> "ColoringPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, QPoly()) + c
        return ColoringPoly(self.num_vars, out)

    def __sub__(self, other: "ColoringPoly") -> "ColoringPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "ColoringPoly":
        return ColoringPoly(self.num_vars, {w: a * c for w, a in self.terms.items()})

    def is_symmetric(self) -> bool:
        return all(self.terms.get(p) == c for w, c in self.terms.items() for p in set(permutations(w)))

    def to_symmetric(self) -> SymPoly:
        if not self.is_symmetric():
            raise ValueError("coloring polynomial is not symmetric")
        terms = {}
        for w, c in self.terms.items():
            if list(w) == sorted(w, reverse=True):
                terms[tuple(x for x in w if x)] = c
        return SymPoly(self.num_vars, terms)

    def to_json(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "terms": [{"weight": list(w), "q_coeffs": c.to_json()} for w, c in sorted(self.terms.items())],
        }


def coloring_polynomial(g: LLTGraph, n: int) -> ColoringPoly:
    """Weighted count of all colorings V -> [n], bucketed by their full weight vector."""
    if n < 1:
        raise ValueError("n must be positive")
    order = _vertex_order(g)
    checks = _checks(g, order)
    nv = g.n
    colors = [0] * nv
    weight = [0] * n
    acc: dict[tuple[int, ...], dict[int, int]] = {}

    def rec(i: int, qexp: int) -> None:
        if i == nv:
            bucket = acc.setdefault(tuple(weight), {})
            bucket[qexp] = bucket.get(qexp, 0) + 1
            return
        lo, hi = 0, n - 1
        soft = []
        for j, kind in checks[i]:
            c = colors[j]
            if kind == _GT:
                lo = max(lo, c + 1)
            elif kind == _LT:
                hi = min(hi, c - 1)
            elif kind == _GE:
                lo = max(lo, c)
            elif kind == _LE:
                hi = min(hi, c)
            else:
                soft.append((c, kind))
        for col in range(lo, hi + 1):
            extra = sum(1 for c, kind in soft if (kind == _Q_IF_GT and col > c) or (kind == _Q_IF_LT and col < c))
            colors[i] = col
            weight[col] += 1
            rec(i + 1, qexp + extra)
            weight[col] -= 1

    rec(0, 0)
    return ColoringPoly(n, {w: QPoly.from_counts(c) for w, c in acc.items()})


def brute_force_llt(g: LLTGraph, n: int) -> SymPoly:
    """Direct sum over all n**|V| colorings; only for tiny graphs (test oracle)."""
    from itertools import product

    acc: dict[tuple, dict[int, int]] = {}
    for f in product(range(1, n + 1), repeat=g.n):
        weight = 0
        ok = True
        for u, v in g.e1:
            if not f[u - 1] > f[v - 1]:
                ok = False
        for u, v in g.e2:
            if not f[u - 1] >= f[v - 1]:
                ok = False
        if not ok:
            continue
        for u, v in g.ed:
            if f[u - 1] > f[v - 1]:
                weight += 1
        expo = [0] * n
        for c in f:
            expo[c - 1] += 1
        if expo == sorted(expo, reverse=True):
            key = tuple(e for e in expo if e)
            bucket = acc.setdefault(key, {})
            bucket[weight] = bucket.get(weight, 0) + 1
    return SymPoly(n, {lam: QPoly.from_counts(c) for lam, c in acc.items()})


# -- constructions ---------------------------------------------------------


@dataclass(frozen=True)
class MeltingLollipop:
    l: int
    m: int
    k: int

    def __post_init__(self):
        if self.l < 0 or self.m < 1 or not (0 <= self.k <= self.m - 1):
            raise ValueError(f"invalid melting lollipop parameters {(self.l, self.m, self.k)}")

    @property
    def size(self) -> int:
        return self.l + self.m


def melting_lollipop_graph(p: MeltingLollipop) -> LLTGraph:
    """Double-edge-only LLT graph: a path 1..l+1 glued to K_m on l+1..l+m, minus k edges at l+1."""
    l, m, k = p.l, p.m, p.k
    path = {(i, i + 1) for i in range(1, l + 1)}
    clique = {(i, j) for i in range(l + 1, l + m + 1) for j in range(i + 1, l + m + 1)}
    erased = {(l + 1, l + m - r) for r in range(k)}
    return LLTGraph(l + m, ed=path | (clique - erased))


def induced_subgraph(g: LLTGraph, s: Iterable[int]) -> LLTGraph:
    """Restriction to ``s`` with vertices renumbered 1..|s| in increasing order."""
    verts = sorted(set(s))
    if not verts:
        raise EmptySubset("induced subgraph needs at least one vertex")
    new = {v: i for i, v in enumerate(verts, 1)}

    def keep(es):
        return {(new[u], new[v]) for u, v in es if u in new and v in new}

    return LLTGraph(len(verts), keep(g.e1), keep(g.e2), keep(g.ed))


def underlying_simple_graph(g: LLTGraph) -> SimpleGraph:
    return SimpleGraph(g.n, g.e1 | g.e2 | g.ed)


def disjoint_union(*graphs: LLTGraph) -> LLTGraph:
    e1, e2, ed = set(), set(), set()
    offset = 0
    for g in graphs:
        e1 |= {(u + offset, v + offset) for u, v in g.e1}
        e2 |= {(u + offset, v + offset) for u, v in g.e2}
        ed |= {(u + offset, v + offset) for u, v in g.ed}
        offset += g.n
    return LLTGraph(offset, e1, e2, ed)


def random_llt_graph(n: int, rng: random.Random, forbidden: Iterable[Edge] = (), density: float = 0.6) -> LLTGraph:
    """Random LLT graph; pairs in ``forbidden`` (either orientation) get no edge."""
    blocked = {(min(u, v), max(u, v)) for u, v in forbidden}
    e1, e2, ed = set(), set(), set()
    for u, v in combinations(range(1, n + 1), 2):
        if (u, v) in blocked or rng.random() > density:
            continue
        edge = (u, v) if rng.random() < 0.5 else (v, u)
        rng.choice((e1, e2, ed)).add(edge)
    return LLTGraph(n, e1, e2, ed)


# -- local relations -------------------------------------------------------

LEMMA_3_2_CASES = ("1a", "1b", "1c", "2_typeI", "2_typeII", "3")


def _lemma_sides(case: str):
    """Return (pattern vertex count, lhs terms, rhs terms).

    Terms are lists of (scalar, pattern-edges dict) on pattern vertices 1..k.
    The type II edge in the two-vertex relations points v -> u: the colorings
    of a free pair split as f(u) > f(v) or f(v) >= f(u).
    """
    g0 = {}
    g1 = {"e1": [(1, 2)]}
    g2 = {"e2": [(2, 1)]}
    gd = {"ed": [(1, 2)]}
    one = QPoly.const(1)
    if case == "1a":
        return 2, [(one, g0)], [(one, g1), (one, g2)]
    if case == "1b":
        return 2, [(one, gd)], [(Q, g1), (one, g2)]
    if case == "1c":
        return 2, [(one, gd)], [(Q_MINUS_1, g1), (one, g0)]
    if case in ("2_typeI", "2_typeII"):
        kind = "e1" if case == "2_typeI" else "e2"
        return 3, [(one, {kind: [(1, 2), (1, 3), (2, 3)]})], [(one, {kind: [(1, 2), (2, 3)]})]
    if case == "3":
        return 3, [(one, {"e2": [(1, 2), (2, 3)], "e1": [(3, 1)]})], []
    raise ValueError(f"unknown local relation case {case!r}")


def _evaluate(terms, base: LLTGraph, placement: dict[int, int], n: int) -> ColoringPoly:
    total = ColoringPoly(n, {})
    for scalar, edges in terms:
        g = base.with_edges(**{k: [(placement[u], placement[v]) for u, v in es] for k, es in edges.items()})
        total = total + coloring_polynomial(g, n).scale(scalar)
    return total


def check_lemma_3_2(case: str, n: int | None = None, ambient_trials: int = 20, seed: int = 0,
                    extra_vertices: int = 2) -> VerificationReport:
    """Check one local relation standalone and inside random ambient graphs.

    ``n`` applies to the standalone check (default: pattern size); embedded
    checks use the ambient vertex count.
    """
    started = time.perf_counter()
    k, lhs, rhs = _lemma_sides(case)
    n = k if n is None else n
    ident = {i: i for i in range(1, k + 1)}
    base = LLTGraph(k)
    reports = [compare(f"lemma_3_2[{case}]", {"n": n}, _evaluate(lhs, base, ident, n),
                       _evaluate(rhs, base, ident, n), started)]
    rng = random.Random(seed)
    for _ in range(ambient_trials):
        total = k + rng.randint(1, extra_vertices)
        chosen = rng.sample(range(1, total + 1), k)
        placement = {i + 1: v for i, v in enumerate(chosen)}
        pattern_pairs = list(combinations(chosen, 2))
        ambient = random_llt_graph(total, rng, forbidden=pattern_pairs)
        t0 = time.perf_counter()
        reports.append(compare(f"lemma_3_2[{case}]", {"n": total, "ambient": ambient.to_json(),
                                                      "placement": placement},
                               _evaluate(lhs, ambient, placement, total),
                               _evaluate(rhs, ambient, placement, total), t0))
    return combine(f"lemma_3_2[{case}]", {"n": n, "ambient_trials": ambient_trials, "seed": seed},
                   reports, started)
