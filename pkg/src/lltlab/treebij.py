"""Trees, Schroeder paths, Dyck paths and parking functions, and the maps between them.

Path conventions: a path of length ``m`` is a string over ``n`` (north),
``e`` (east) and ``d`` (diagonal) from ``(0, 0)`` to ``(m, m)``.  Box
``(i, j)`` is the unit box whose top right corner is ``(i, j)``; the diagonal
box ``(i, i)`` carries vertex ``i``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from lltlab.errors import NotAPathGraph, PatternMismatch, PreconditionViolated
from lltlab.lltgraph import LLTGraph, SimpleGraph, llt_of_graph
from lltlab.qpoly import Q, Q_MINUS_1
from lltlab.report import VerificationReport, compare
from lltlab.shapes import ShapeSequence, SkewShape, graph_labels, graph_to_strips, shapes_to_graph

# -- trees ----------------------------------------------------------------


@dataclass(frozen=True)
class PlaneTree:
    """A rooted tree whose children are ordered left to right."""

    label: int
    children: tuple["PlaneTree", ...] = ()

    def preorder(self) -> Iterator["PlaneTree"]:
        yield self
        for c in self.children:
            yield from c.preorder()

    def labels(self) -> list[int]:
        return [v.label for v in self.preorder()]

    @property
    def size(self) -> int:
        return sum(1 for _ in self.preorder())

    def shape(self) -> tuple:
        """Label-free nested tuple describing the plane tree."""
        return tuple(c.shape() for c in self.children)

    def to_json(self):
        return {"label": self.label, "children": [c.to_json() for c in self.children]}


@dataclass(frozen=True)
class LabeledTree:
    """A tree on the vertex set 1..m given by its edges."""

    m: int
    edges: frozenset

    def __post_init__(self):
        edges = frozenset((min(u, v), max(u, v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if len(edges) != self.m - 1:
            raise ValueError(f"a tree on {self.m} vertices has {self.m - 1} edges, got {len(edges)}")
        if not SimpleGraph(self.m, edges).is_connected():
            raise ValueError("edges do not form a tree")

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_json(self):
        return [list(e) for e in self.sorted_edges()]

    @classmethod
    def from_edges(cls, edges, m: int | None = None) -> "LabeledTree":
        edges = [tuple(e) for e in edges]
        if m is None:
            m = max((max(e) for e in edges), default=1)
        return cls(m, frozenset(edges))


def _drawing(root: int, adj: dict[int, set[int]], parent: int | None = None) -> PlaneTree:
    kids = sorted(w for w in adj[root] if w != parent)
    return PlaneTree(root, tuple(_drawing(w, adj, root) for w in kids))


def canonical_drawing(t: LabeledTree, root: int | None = None) -> PlaneTree:
    """Root at the smallest label (or ``root``); children left to right by increasing label."""
    adj: dict[int, set[int]] = {v: set() for v in range(1, t.m + 1)}
    for u, v in t.edges:
        adj[u].add(v)
        adj[v].add(u)
    return _drawing(1 if root is None else root, adj)


def draw_forest_component(vertices: list[int], edges: list[tuple[int, int]]) -> PlaneTree:
    """Canonical drawing of a tree on an arbitrary label set."""
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return _drawing(min(vertices), adj)


@lru_cache(maxsize=None)
def _plane_shapes(m: int) -> tuple[tuple, ...]:
    if m == 1:
        return ((),)
    out = []
    # first child subtree of size a, remaining siblings form a tree of size m - a
    for a in range(1, m):
        for first in _plane_shapes(a):
            for rest in _plane_shapes(m - a):
                out.append((first,) + rest)
    return tuple(out)


def _label_shape(shape: tuple, counter: list[int]) -> PlaneTree:
    counter[0] += 1
    label = counter[0]
    return PlaneTree(label, tuple(_label_shape(c, counter) for c in shape))


def plane_trees(m: int) -> list[PlaneTree]:
    """All plane rooted trees with ``m`` vertices, labelled 1..m in preorder."""
    if m < 1:
        raise ValueError("m must be positive")
    return [_label_shape(s, [0]) for s in _plane_shapes(m)]


def path_decomposition(t: PlaneTree) -> list[list[int]]:
    """Split the vertices into downward paths W_1, ..., W_k.

    W_1 runs from the root along first children to a leaf.  Each later path
    starts at the deepest (then left-most) unused vertex attached to the most
    recent path that still has unused neighbours, and again follows first
    children down to a leaf.
    """
    order = {}
    depth = {}
    parent: dict[int, int | None] = {}
    node = {}

    def walk(v: PlaneTree, d: int, p: int | None):
        order[v.label] = len(order)
        depth[v.label] = d
        parent[v.label] = p
        node[v.label] = v
        for c in v.children:
            walk(c, d + 1, v.label)

    walk(t, 0, None)

    def descend(v: PlaneTree) -> list[int]:
        out = [v.label]
        while v.children:
            v = v.children[0]
            out.append(v.label)
        return out

    used: set[int] = set()
    paths: list[list[int]] = []
    first = descend(t)
    paths.append(first)
    used.update(first)
    while len(used) < len(order):
        start = None
        for path in reversed(paths):
            cand = set()
            for v in path:
                cand.update(c.label for c in node[v].children if c.label not in used)
                p = parent[v]
                if p is not None and p not in used:
                    cand.add(p)
            if cand:
                start = min(cand, key=lambda v: (-depth[v], order[v]))
                break
        if start is None:
            raise AssertionError("path decomposition stalled")
        w = descend(node[start])
        paths.append(w)
        used.update(w)
    return paths


def _depths(t: PlaneTree) -> dict[int, int]:
    out = {}

    def walk(v: PlaneTree, d: int):
        out[v.label] = d
        for c in v.children:
            walk(c, d + 1)

    walk(t, 0)
    return out


def nu_labels(t: PlaneTree) -> tuple[ShapeSequence, dict[tuple[int, int, int], int]]:
    """The vertical strip sequence of a plane tree and the vertex sitting in each cell.

    Depth is measured in edges from the root and ``H`` is one more than the
    largest depth; strip i is (1^s)/(1^(s - |W_i|)) with s = H - depth(top of W_i).
    """
    paths = path_decomposition(t)
    depth = _depths(t)
    H = 1 + max(depth.values())
    shapes = []
    cells = {}
    for i, w in enumerate(paths, 1):
        s = H - depth[w[0]]
        shapes.append(SkewShape.strip(s, s - len(w)))
        for v in w:
            cells[(i, 1, H - depth[v])] = v
    return ShapeSequence(tuple(shapes)), cells


def nu(t: PlaneTree) -> ShapeSequence:
    return nu_labels(t)[0]


def diagonal_labels(t: PlaneTree) -> list[int]:
    """Tree labels in the order of the diagonal boxes of the associated path."""
    seq, cells = nu_labels(t)
    return [cells[c] for c in graph_labels(seq)]


# -- Schroeder paths --------------------------------------------------------


@dataclass(frozen=True)
class SchroderPath:
    steps: str

    def __post_init__(self):
        x = y = 0
        for k, s in enumerate(self.steps):
            if s == "n":
                y += 1
            elif s == "e":
                x += 1
            elif s == "d":
                if x == y:
                    raise ValueError(f"diagonal step on the diagonal at step {k}")
                x += 1
                y += 1
            else:
                raise ValueError(f"unknown step {s!r}")
            if y < x:
                raise ValueError(f"path {self.steps!r} falls below the diagonal at step {k}")
        if x != y:
            raise ValueError(f"path {self.steps!r} ends at {(x, y)}, not on the diagonal")

    @property
    def m(self) -> int:
        return self.steps.count("e") + self.steps.count("d")

    def points(self) -> list[tuple[int, int]]:
        pts = [(0, 0)]
        x = y = 0
        for s in self.steps:
            if s == "n":
                y += 1
            elif s == "e":
                x += 1
            else:
                x += 1
                y += 1
            pts.append((x, y))
        return pts

    def heights(self) -> list[int]:
        """h(i) for i = 1..m: the height at which column i is left by an e or d step."""
        out = []
        x = y = 0
        for s in self.steps:
            if s == "n":
                y += 1
            else:
                out.append(y)
                x += 1
                y += s == "d"
        return out

    def column_steps(self) -> str:
        """The e/d step taken in each column."""
        return "".join(s for s in self.steps if s != "n")

    def jumps(self) -> list[int]:
        h = self.heights()
        return [h[i + 1] - h[i] for i in range(len(h) - 1)]

    def outer_corners(self) -> list[tuple[int, int]]:
        pts = self.points()
        return [(pts[k][0] + 1, pts[k][1] + 1) for k in range(len(self.steps) - 1)
                if self.steps[k:k + 2] == "en"]

    def is_connected(self) -> bool:
        return all(x != y for x, y in self.points()[1:-1])

    def is_dyck(self) -> bool:
        return "d" not in self.steps

    def satisfies_tree_conditions(self) -> bool:
        """Touches the diagonal only at its ends, starts with n then d (m >= 2), no outer corners."""
        if self.m == 1:
            return self.steps == "ne"
        return self.is_connected() and self.steps.startswith("nd") and "en" not in self.steps

    def __str__(self):
        return self.steps


@lru_cache(maxsize=None)
def _paths_from(x: int, y: int, m: int, dyck: bool) -> tuple[str, ...]:
    if (x, y) == (m, m):
        return ("",)
    out = []
    if y < m:
        out += ["n" + r for r in _paths_from(x, y + 1, m, dyck)]
    if x < y:
        out += ["e" + r for r in _paths_from(x + 1, y, m, dyck)]
        if not dyck and y < m:
            out += ["d" + r for r in _paths_from(x + 1, y + 1, m, dyck)]
    return tuple(out)


def schroder_paths(m: int) -> list[SchroderPath]:
    """All Schroeder paths of length m in lexicographic order of their step strings (d < e < n)."""
    return [SchroderPath(s) for s in sorted(_paths_from(0, 0, m, False))]


def dyck_paths(m: int) -> list[SchroderPath]:
    return [SchroderPath(s) for s in sorted(_paths_from(0, 0, m, True))]


def schroder_to_graph(p: SchroderPath) -> LLTGraph:
    """Boxes strictly under the path become double edges; boxes crossed by a d step become type I edges."""
    e1, ed = set(), set()
    for i, (h, s) in enumerate(zip(p.heights(), p.column_steps()), 1):
        ed.update((i, j) for j in range(i + 1, h + 1))
        if s == "d":
            e1.add((i, h + 1))
    return LLTGraph(p.m, e1, (), ed)


def graph_to_schroder(g: LLTGraph) -> SchroderPath:
    """Inverse of :func:`schroder_to_graph`; raises NotAPathGraph if ``g`` is not in its image."""
    if g.e2:
        raise NotAPathGraph(f"type II edge {min(g.e2)} cannot come from a path")
    m = g.n
    if m == 0:
        raise NotAPathGraph("empty graph")
    steps = []
    y = 0
    for i in range(1, m + 1):
        h = max([i] + [j for (a, j) in g.ed if a == i])
        if h < y:
            raise NotAPathGraph(f"box ({i},{y}) must lie under the path but is not a double edge")
        steps.append("n" * (h - y))
        if (i, h + 1) in g.e1:
            steps.append("d")
            y = h + 1
        else:
            steps.append("e")
            y = h
    if y > m:
        raise NotAPathGraph(f"path leaves the {m}x{m} square in column {m}")
    steps.append("n" * (m - y))
    try:
        p = SchroderPath("".join(steps))
    except ValueError as exc:
        raise NotAPathGraph(str(exc)) from None
    back = schroder_to_graph(p)
    if back != g:
        bad = sorted((back.e1 ^ g.e1) | (back.ed ^ g.ed))
        raise NotAPathGraph(f"box {bad[0]} is inconsistent with every path")
    return p


def schroder_to_strips(p: SchroderPath) -> ShapeSequence:
    return graph_to_strips(schroder_to_graph(p))


def tree_to_schroder(t: PlaneTree) -> SchroderPath:
    return graph_to_schroder(shapes_to_graph(nu(t)))


# -- Dyck paths and parking functions ---------------------------------------


def schroder_to_dyck(p: SchroderPath) -> SchroderPath | str:
    """Replace each d by "en" and drop the forced leading "n" and "e".

    Returns the empty string for the one-vertex path.
    """
    if not p.satisfies_tree_conditions():
        raise PreconditionViolated(f"{p} is not connected, or does not start with nd, or has an outer corner")
    if p.m == 1:
        return ""
    full = p.steps.replace("d", "en")
    assert full.startswith("nen")
    return SchroderPath(full[2:])


def dyck_to_schroder(d: SchroderPath | str) -> SchroderPath:
    steps = d.steps if isinstance(d, SchroderPath) else d
    if "d" in steps:
        raise PreconditionViolated(f"{steps} is not a Dyck path")
    return SchroderPath(("ne" + steps).replace("en", "d"))


ParkingFunction = tuple[int, ...]


def is_parking_function(f) -> bool:
    m = len(f)
    vals = sorted(f)
    return all(1 <= v <= i for i, v in enumerate(vals, 1)) and all(1 <= v <= m for v in f)


def parking_functions(m: int) -> list[ParkingFunction]:
    """All parking functions on m cars as tuples (f(1), ..., f(m)), lexicographically."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return [f for f in product(range(1, m + 1), repeat=m) if is_parking_function(f)]


def dyck_to_parking(d: SchroderPath | str, labels=None) -> ParkingFunction:
    """Column of each label, where the k-th north step carries ``labels[k]`` (default k + 1)."""
    steps = d.steps if isinstance(d, SchroderPath) else d
    m = steps.count("n")
    labels = list(range(1, m + 1)) if labels is None else list(labels)
    if sorted(labels) != list(range(1, m + 1)):
        raise ValueError("labels must be a permutation of 1..m")
    f = [0] * m
    x = 0
    k = 0
    for s in steps:
        if s == "n":
            f[labels[k] - 1] = x + 1
            k += 1
        else:
            x += 1
    return tuple(f)


def parking_to_dyck(f) -> SchroderPath | str:
    """Dyck path whose column i has as many north steps as cars preferring spot i."""
    m = len(f)
    if not is_parking_function(f):
        raise ValueError(f"{f} is not a parking function")
    counts = [0] * (m + 1)
    for v in f:
        counts[v] += 1
    steps = "".join("n" * counts[i] + "e" for i in range(1, m + 1))
    return SchroderPath(steps) if m else ""


def parking_strips(f) -> ShapeSequence:
    """Vertical strips attached to a parking function through its Dyck path."""
    return schroder_to_strips(dyck_to_schroder(parking_to_dyck(f)))


def tree_to_parking(t: LabeledTree) -> ParkingFunction:
    """Parking function on m - 1 cars: car v - 1 parks in the column of the north step carrying v."""
    plane = canonical_drawing(t)
    diag = diagonal_labels(plane)
    d = schroder_to_dyck(tree_to_schroder(plane))
    cars = [v - 1 for v in diag[1:]]
    return dyck_to_parking(d, cars) if cars else ()


# -- spanning trees ---------------------------------------------------------


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n + 1))

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def _connected_with(n: int, edges) -> bool:
    dsu = _DSU(n)
    comps = n
    for u, v in edges:
        if dsu.union(u, v):
            comps -= 1
    return comps <= 1


def spanning_trees(sg: SimpleGraph) -> Iterator[LabeledTree]:
    """Every spanning tree, each once, in lexicographic order of sorted edge lists.

    Include/exclude recursion over the sorted edges; an exclusion is only
    explored while the remaining edges can still connect the graph.
    """
    edges = sg.sorted_edges()
    n = sg.n
    if n == 0:
        return
    if n == 1:
        yield LabeledTree(1, frozenset())
        return
    chosen: list[tuple[int, int]] = []

    def rec(k: int, parent: list[int]):
        if len(chosen) == n - 1:
            yield LabeledTree(n, frozenset(chosen))
            return
        if k == len(edges) or len(edges) - k < n - 1 - len(chosen):
            return
        u, v = edges[k]
        dsu = _DSU(n)
        dsu.parent = parent[:]
        if dsu.union(u, v):
            chosen.append((u, v))
            yield from rec(k + 1, dsu.parent)
            chosen.pop()
        if _connected_with(n, chosen + edges[k + 1:]):
            yield from rec(k + 1, parent)

    yield from rec(0, list(range(n + 1)))


def matrix_tree_count(sg: SimpleGraph) -> int:
    """Number of spanning trees via the determinant of a reduced Laplacian."""
    import sympy

    n = sg.n
    if n <= 1:
        return 1
    lap = sympy.zeros(n, n)
    for u, v in sg.edges:
        lap[u - 1, v - 1] -= 1
        lap[v - 1, u - 1] -= 1
        lap[u - 1, u - 1] += 1
        lap[v - 1, v - 1] += 1
    return int(lap[1:, 1:].det(method="bareiss"))


# -- path relations ---------------------------------------------------------

LEMMA_4_5_CASES = ("A", "B")


def _point_after(steps: str) -> tuple[int, int]:
    x = y = 0
    for s in steps:
        x += s in "ed"
        y += s in "nd"
    return x, y


def lemma_4_5_terms(case: str, p: SchroderPath, position: int):
    """Return (lhs path, [(scalar, path), ...]) for the relation applied at ``position``.

    Raises PatternMismatch when the relation does not apply there.
    """
    s = p.steps
    if case == "A":
        if s[position:position + 2] != "ne":
            raise PatternMismatch(f"no 'ne' at position {position} of {s}")
        S, T = s[:position], s[position + 2:]
        x, y = _point_after(S)
        if y <= x:
            raise PatternMismatch(f"'ne' at position {position} of {s} starts on the diagonal")
        return p, [(Q_MINUS_1, SchroderPath(S + "d" + T)), (1, SchroderPath(S + "en" + T))]
    if case == "B":
        if s[position:position + 2] != "nd":
            raise PatternMismatch(f"no 'nd' at position {position} of {s}")
        S = s[:position]
        i, j = _point_after(S)
        if j <= i:
            raise PatternMismatch(f"'nd' at position {position} of {s} starts on the diagonal")
        k = position + 2
        x = i + 1
        while k < len(s) and not (x == j and s[k] != "n"):
            x += s[k] in "ed"
            k += 1
        if x != j or s[k:k + 2] != "ee":
            raise PatternMismatch(f"the part after 'nd' at position {position} of {s} is not followed by 'ee' at x={j}")
        R, T = s[position + 2:k], s[k + 2:]
        return p, [(Q, SchroderPath(S + "dn" + R + "ee" + T))]
    raise ValueError(f"unknown case {case!r}")


def admissible_positions(case: str, p: SchroderPath) -> list[int]:
    out = []
    for pos in range(len(p.steps)):
        try:
            lemma_4_5_terms(case, p, pos)
        except PatternMismatch:
            continue
        out.append(pos)
    return out


def check_lemma_4_5(case: str, p: SchroderPath, position: int, n: int | None = None) -> VerificationReport:
    started = time.perf_counter()
    lhs_path, rhs_terms = lemma_4_5_terms(case, p, position)
    n = p.m if n is None else n
    lhs = llt_of_graph(schroder_to_graph(lhs_path), n)
    rhs = None
    for scalar, path in rhs_terms:
        term = llt_of_graph(schroder_to_graph(path), n).scale(scalar)
        rhs = term if rhs is None else rhs + term
    return compare(f"lemma_4_5[{case}]", {"path": p.steps, "position": position, "n": n}, lhs, rhs, started,
                   rhs_paths=[path.steps for _, path in rhs_terms])

