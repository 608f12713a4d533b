"""Skew shape sequences and the inversion generating function of their fillings.

Cells use French coordinates: ``(x, y)`` is the box in column ``x`` and row
``y``, with row 1 at the bottom.  The content of a cell is ``x - y``; inside a
sequence of ``m`` shapes the cell of shape ``i`` (1-based) has shifted content
``m * content + i``.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from lltlab.errors import NotAPathGraph
from lltlab.lltgraph import LLTGraph
from lltlab.qpoly import QPoly
from lltlab.symfunc import Partition, SymPoly, partition, partitions

Cell = tuple[int, int, int]  # (shape index, column, row)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        outer = partition(self.outer)
        inner = partition(self.inner)
        if len(inner) > len(outer) or any(mu > lam for lam, mu in zip(outer, inner)):
            raise ValueError(f"inner {inner} does not fit inside outer {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @classmethod
    def strip(cls, s: int, t: int = 0) -> "SkewShape":
        """The vertical strip (1^s)/(1^t)."""
        return cls((1,) * s, (1,) * t)

    def cells(self) -> list[tuple[int, int]]:
        """(column, row) pairs sorted by row then column."""
        out = []
        for y, length in enumerate(self.outer, 1):
            start = self.inner[y - 1] if y - 1 < len(self.inner) else 0
            out.extend((x, y) for x in range(start + 1, length + 1))
        return out

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def __str__(self):
        def fmt(p):
            return "(" + ",".join(map(str, p)) + ")"
        return fmt(self.outer) + ("/" + fmt(self.inner) if self.inner else "")


@dataclass(frozen=True)
class ShapeSequence:
    shapes: tuple[SkewShape, ...]

    def __post_init__(self):
        shapes = tuple(self.shapes)
        if not shapes:
            raise ValueError("a shape sequence needs at least one shape")
        object.__setattr__(self, "shapes", shapes)

    @property
    def m(self) -> int:
        return len(self.shapes)

    def cells(self) -> list[Cell]:
        """All cells, sorted by (shape index, row, column); shape indices are 1-based."""
        out = [(i, x, y) for i, sh in enumerate(self.shapes, 1) for x, y in sh.cells()]
        out.sort(key=lambda c: (c[0], c[2], c[1]))
        return out

    @property
    def size(self) -> int:
        return sum(sh.size for sh in self.shapes)

    def content(self, cell: Cell) -> int:
        return cell[1] - cell[2]

    def shifted_content(self, cell: Cell) -> int:
        return self.m * (cell[1] - cell[2]) + cell[0]

    def __str__(self):
        return "[" + ",".join(str(sh) for sh in self.shapes) + "]"

    def to_json(self) -> list[dict]:
        return [{"outer": list(sh.outer), "inner": list(sh.inner)} for sh in self.shapes]

    @classmethod
    def from_json(cls, data: list) -> "ShapeSequence":
        return cls(tuple(SkewShape(tuple(d["outer"]), tuple(d.get("inner", ()))) for d in data))


# -- parsing ----------------------------------------------------------------

_SHAPE_RE = re.compile(r"\(([^()]*)\)(?:\s*/\s*(?:\(([^()]*)\)|∅))?")


def _parse_parts(text: str | None) -> Partition:
    if text is None:
        return ()
    parts: list[int] = []
    for tok in text.replace(" ", "").split(","):
        if not tok or tok == "∅":
            continue
        if "^" in tok:
            base, exp = tok.split("^")
            parts.extend([int(base)] * int(exp))
        else:
            parts.append(int(tok))
    return partition(parts)


def parse_shape(text: str) -> SkewShape:
    m = _SHAPE_RE.fullmatch(text.strip())
    if not m:
        raise ValueError(f"cannot parse skew shape {text!r}")
    return SkewShape(_parse_parts(m.group(1)), _parse_parts(m.group(2)))


def parse_sequence(text: str) -> ShapeSequence:
    """Parse ``"[(3,2)/(1),(1,1)]"``; the brackets are optional and ``(1^3)`` is accepted."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    shapes = []
    pos = 0
    while pos < len(body):
        if body[pos] in ", ":
            pos += 1
            continue
        m = _SHAPE_RE.match(body, pos)
        if not m:
            raise ValueError(f"cannot parse shape sequence {text!r} near position {pos}")
        shapes.append(SkewShape(_parse_parts(m.group(1)), _parse_parts(m.group(2))))
        pos = m.end()
    return ShapeSequence(tuple(shapes))


# -- tableaux -------------------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    entries: tuple[tuple[Cell, int], ...]

    def as_dict(self) -> dict[Cell, int]:
        return dict(self.entries)

    def weight(self, n: int) -> tuple[int, ...]:
        w = [0] * n
        for _, v in self.entries:
            w[v - 1] += 1
        return tuple(w)


def _neighbours(seq: ShapeSequence, cells: list[Cell]):
    """Index of the cell below and to the left of each cell (or None)."""
    index = {c: k for k, c in enumerate(cells)}
    below = [index.get((i, x, y - 1)) for i, x, y in cells]
    left = [index.get((i, x - 1, y)) for i, x, y in cells]
    return below, left


def enumerate_ssyt(seq: ShapeSequence, n: int) -> Iterator[Tableau]:
    """Every tuple of semistandard fillings with entries in 1..n.

    Cells are filled in (shape, row, column) order; smaller entries come first.
    """
    if n < 1:
        raise ValueError("n must be positive")
    cells = seq.cells()
    below, left = _neighbours(seq, cells)
    values = [0] * len(cells)

    def rec(k: int):
        if k == len(cells):
            yield Tableau(tuple(zip(cells, values)))
            return
        lo = 1
        if below[k] is not None:
            lo = values[below[k]] + 1
        if left[k] is not None:
            lo = max(lo, values[left[k]])
        for v in range(lo, n + 1):
            values[k] = v
            yield from rec(k + 1)

    yield from rec(0)


def inversion_pairs(seq: ShapeSequence) -> list[tuple[Cell, Cell]]:
    """Pairs (a, b) with 0 < shifted(b) - shifted(a) < m."""
    cells = seq.cells()
    m = seq.m
    out = []
    for a in cells:
        for b in cells:
            d = seq.shifted_content(b) - seq.shifted_content(a)
            if 0 < d < m:
                out.append((a, b))
    return out


def inv_count(seq: ShapeSequence, t: Tableau) -> int:
    vals = t.as_dict()
    return sum(1 for a, b in inversion_pairs(seq) if vals[a] > vals[b])


def weight_table(seq: ShapeSequence, n: int) -> dict[tuple[int, ...], QPoly]:
    """Inversion generating function for every weight vector, over all fillings."""
    pairs = inversion_pairs(seq)
    full: dict[tuple[int, ...], dict[int, int]] = {}
    for t in enumerate_ssyt(seq, n):
        vals = t.as_dict()
        inv = sum(1 for a, b in pairs if vals[a] > vals[b])
        bucket = full.setdefault(t.weight(n), {})
        bucket[inv] = bucket.get(inv, 0) + 1
    return {w: QPoly.from_counts(c) for w, c in full.items()}


def llt_by_enumeration(seq: ShapeSequence, n: int) -> SymPoly:
    """Read the monomial coefficients off the full filling enumeration.

    Slow; kept as an oracle that walks every tableau.
    """
    terms = {}
    for w, c in weight_table(seq, n).items():
        if list(w) == sorted(w, reverse=True):
            terms[tuple(x for x in w if x)] = c
    return SymPoly(n, terms)


@lru_cache(maxsize=None)
def _llt_cached(seq: ShapeSequence, n: int) -> SymPoly:
    cells = seq.cells()
    below, left = _neighbours(seq, cells)
    # for each cell, the earlier cells it forms an inversion pair with
    shifted = [seq.shifted_content(c) for c in cells]
    m = seq.m
    pairs: list[list[tuple[int, bool]]] = [[] for _ in cells]
    for k in range(len(cells)):
        for j in range(k):
            d = shifted[k] - shifted[j]
            if 0 < d < m:
                pairs[k].append((j, True))  # j has the smaller shifted content
            elif 0 < -d < m:
                pairs[k].append((j, False))
    terms = {}
    size = len(cells)
    for lam in partitions(size, n):
        budget = list(lam)
        ncol = len(lam)
        values = [0] * size
        counts: dict[int, int] = {}

        def rec(k: int, inv: int) -> None:
            if k == size:
                counts[inv] = counts.get(inv, 0) + 1
                return
            lo = 0
            if below[k] is not None:
                lo = values[below[k]] + 1
            if left[k] is not None:
                lo = max(lo, values[left[k]])
            for v in range(lo, ncol):
                if not budget[v]:
                    continue
                extra = 0
                for j, earlier_is_lower in pairs[k]:
                    if earlier_is_lower:
                        if values[j] > v:
                            extra += 1
                    elif v > values[j]:
                        extra += 1
                budget[v] -= 1
                values[k] = v
                rec(k + 1, inv + extra)
                budget[v] += 1

        rec(0, 0)
        if counts:
            terms[lam] = QPoly.from_counts(counts)
    return SymPoly._raw(n, terms)


def llt_of_shapes(seq: ShapeSequence, n: int) -> SymPoly:
    """LLT polynomial of a shape sequence in ``n`` variables (monomial basis).

    Each coefficient of ``m_lam`` is obtained by filling the cells with content
    exactly ``lam`` and counting inversions.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n < seq.size:
        warnings.warn(f"{n} variables for {seq.size} cells: result is a truncation", stacklevel=2)
    return _llt_cached(seq, n)


# -- graphs ---------------------------------------------------------------


def graph_labels(seq: ShapeSequence) -> list[Cell]:
    """Cells listed in increasing shifted content; position k holds vertex k + 1."""
    return sorted(seq.cells(), key=seq.shifted_content)


def shapes_to_graph(seq: ShapeSequence) -> LLTGraph:
    cells = graph_labels(seq)
    vid = {c: k for k, c in enumerate(cells, 1)}
    m = seq.m
    e1, e2, ed = set(), set(), set()
    for c in cells:
        i, x, y = c
        if (i, x, y - 1) in vid:
            e1.add((vid[c], vid[i, x, y - 1]))
        if (i, x - 1, y) in vid:
            e2.add((vid[c], vid[i, x - 1, y]))
    for a, b in product(cells, repeat=2):
        if 0 < seq.shifted_content(b) - seq.shifted_content(a) < m:
            ed.add((vid[a], vid[b]))
    return LLTGraph(len(cells), e1, e2, ed)


def _e1_chains(g: LLTGraph) -> list[list[int]]:
    nxt: dict[int, int] = {}
    prv: dict[int, int] = {}
    for u, v in sorted(g.e1):
        if u > v:
            raise NotAPathGraph(f"type I edge {(u, v)} points upwards in the vertex order")
        if u in nxt or v in prv:
            raise NotAPathGraph(f"type I edges do not form disjoint chains at {(u, v)}")
        nxt[u] = v
        prv[v] = u
    chains = []
    for v in g.vertices:
        if v in prv:
            continue
        chain = [v]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        chains.append(chain)
    return chains


def graph_to_strips(g: LLTGraph) -> ShapeSequence:
    """A sequence of vertical strips whose associated graph is ``g``.

    Shifted contents ``P_v`` are found as the least solution of the difference
    system forced by the edges (with ``N`` strips, a type I pair is exactly
    ``N`` apart, a double edge strictly between 0 and ``N`` and a free pair at
    least ``N``).  The result is checked by rebuilding the graph.
    """
    if g.e2:
        raise NotAPathGraph("vertical strips never produce type II edges")
    if g.n == 0:
        raise NotAPathGraph("empty graph")
    chains = _e1_chains(g)
    N = len(chains)
    cons: list[tuple[int, int, int]] = []  # P[b] >= P[a] + w
    for u in range(1, g.n + 1):
        for v in range(u + 1, g.n + 1):
            if (u, v) in g.e1:
                cons += [(u, v, N), (v, u, -N)]
            elif (u, v) in g.ed:
                cons += [(u, v, 1), (v, u, 1 - N)]
            elif (v, u) in g.e1 or (v, u) in g.ed:
                raise NotAPathGraph(f"edge {(v, u)} points against the vertex order")
            else:
                cons.append((u, v, N))
    P = {v: 0 for v in g.vertices}
    for _ in range(g.n + 1):
        changed = False
        for a, b, w in cons:
            if P[a] + w > P[b]:
                P[b] = P[a] + w
                changed = True
        if not changed:
            break
    else:
        raise NotAPathGraph("edge constraints are contradictory (positive cycle)")
    residue = {tuple(ch): P[ch[0]] % N for ch in chains}
    contents = {v: P[v] // N for v in g.vertices}
    top = max(contents.values())
    ordered = sorted(chains, key=lambda ch: (residue[tuple(ch)], contents[ch[0]]))
    shapes = []
    for ch in ordered:
        a = contents[ch[0]] - top
        b = contents[ch[-1]] - top
        shapes.append(SkewShape.strip(1 - a, -b))
    seq = ShapeSequence(tuple(shapes))
    if shapes_to_graph(seq) != g:
        raise NotAPathGraph("no sequence of vertical strips realizes this graph")
    return seq
