import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lltlab.lltgraph import LLTGraph, llt_of_graph
from lltlab.qpoly import ONE, QPoly
from lltlab.shapes import (
    ShapeSequence,
    SkewShape,
    Tableau,
    enumerate_ssyt,
    graph_to_strips,
    inv_count,
    llt_by_enumeration,
    llt_of_shapes,
    parse_sequence,
    parse_shape,
    shapes_to_graph,
    weight_table,
)
from lltlab.symfunc import SymPoly, partitions

PAIR = parse_sequence("[(1),(1)]")
PAIR_LLT = SymPoly(2, {(2,): ONE, (1, 1): QPoly([1, 1])})


def seq(text):
    return parse_sequence(text)


# -- parsing and shapes -----------------------------------------------------


def test_parse_forms():
    assert parse_shape("(3,2)/(1)") == SkewShape((3, 2), (1,))
    assert parse_shape("(1^3)/(1)") == SkewShape((1, 1, 1), (1,))
    assert parse_shape("(2,1)/∅") == SkewShape((2, 1))
    s = seq("[(3,2)/(1),(1,1)]")
    assert s.m == 2 and s.size == 6
    assert str(s) == "[(3,2)/(1),(1,1)]"
    assert ShapeSequence.from_json(s.to_json()) == s


@pytest.mark.parametrize("bad", ["(1,2)", "(2)/(3)", "[(1),x]", "((1)"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_sequence(bad)


def test_strip_cells_and_contents():
    s = ShapeSequence((SkewShape.strip(3, 1), SkewShape.strip(1)))
    assert s.cells() == [(1, 1, 2), (1, 1, 3), (2, 1, 1)]
    assert [s.content(c) for c in s.cells()] == [-1, -2, 0]
    assert [s.shifted_content(c) for c in s.cells()] == [-1, -3, 2]


# -- tableaux ---------------------------------------------------------------


def test_tableau_examples():
    assert len(list(enumerate_ssyt(seq("(1)"), 2))) == 2
    column = list(enumerate_ssyt(seq("(1,1)"), 2))
    assert [t.as_dict() for t in column] == [{(1, 1, 1): 1, (1, 1, 2): 2}]
    row = list(enumerate_ssyt(seq("(2)"), 2))
    assert sorted(tuple(t.as_dict().values()) for t in row) == [(1, 1), (1, 2), (2, 2)]


def test_inversion_examples():
    a, b = PAIR.cells()
    assert inv_count(PAIR, Tableau(((a, 2), (b, 1)))) == 1
    assert inv_count(PAIR, Tableau(((a, 1), (b, 1)))) == 0
    single = seq("(2,1)")
    assert all(inv_count(single, t) == 0 for t in enumerate_ssyt(single, 3))


def test_llt_examples():
    assert llt_of_shapes(seq("(1)"), 2) == SymPoly.monomial((1,), 2)
    assert llt_of_shapes(PAIR, 2) == PAIR_LLT
    assert llt_of_shapes(seq("(1,1)"), 2) == SymPoly.monomial((1, 1), 2)


def test_too_few_variables_warns():
    with pytest.warns(UserWarning):
        llt_of_shapes(seq("(1,1,1)"), 2)


# -- graphs -----------------------------------------------------------------


def test_two_shape_example_graph():
    # cells in increasing shifted content: a x b y c d in the drawing
    g = shapes_to_graph(seq("[(3,2)/(1),(1,1)]"))
    assert g == LLTGraph(6, e1={(3, 5), (2, 4)}, e2={(3, 1), (6, 5)}, ed={(1, 2), (2, 3), (3, 4), (4, 5)})


def test_small_graphs():
    assert shapes_to_graph(seq("(1)")) == LLTGraph(1)
    assert shapes_to_graph(PAIR) == LLTGraph(2, ed={(1, 2)})


def test_strips_realizer_inverts_graph_map():
    s = seq("[(1^3)/(1),(1^2),(1),(1^2)/(1)]")
    assert shapes_to_graph(graph_to_strips(shapes_to_graph(s))) == shapes_to_graph(s)


# -- properties -------------------------------------------------------------


@st.composite
def skew_shapes(draw, max_cells):
    d = draw(st.integers(1, max_cells))
    outer = draw(st.sampled_from(partitions(d)))
    inner = []
    for i, row in enumerate(outer):
        cap = min(row, inner[-1]) if inner else row
        inner.append(draw(st.integers(0, cap)))
    inner = tuple(x for x in inner if x)
    if sum(inner) == sum(outer):
        inner = ()
    return SkewShape(outer, inner)


@st.composite
def small_sequences(draw, max_cells=5):
    shapes = [draw(skew_shapes(max_cells))]
    while len(shapes) < 3 and sum(sh.size for sh in shapes) < max_cells and draw(st.booleans()):
        shapes.append(draw(skew_shapes(max_cells - sum(sh.size for sh in shapes))))
    return ShapeSequence(tuple(shapes))


@given(small_sequences())
def test_graph_route_matches_tableau_route(s):
    n = s.size
    assert llt_of_shapes(s, n) == llt_of_graph(shapes_to_graph(s), n)


@given(small_sequences(max_cells=4))
def test_fast_route_matches_full_enumeration(s):
    n = s.size
    assert llt_of_shapes(s, n) == llt_by_enumeration(s, n)


@given(small_sequences(max_cells=4))
def test_weight_table_is_symmetric(s):
    table = weight_table(s, s.size)
    for w, c in table.items():
        assert table[tuple(sorted(w, reverse=True))] == c


@given(small_sequences())
def test_homogeneous_of_cell_degree(s):
    a = llt_of_shapes(s, s.size)
    assert a.degrees() == {s.size}


@given(small_sequences(max_cells=4))
def test_single_shape_is_q_free(s):
    only = ShapeSequence(s.shapes[:1])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        a = llt_of_shapes(only, only.size)
    assert all(c.degree <= 0 for _, c in a.items())
