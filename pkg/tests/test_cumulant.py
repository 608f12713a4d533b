import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lltlab.cumulant import (
    bell,
    cumulant_numerator,
    cumulant_of_graph,
    forest_count_by_trees,
    forest_components,
    printed_sign_comparison,
    set_partitions,
    set_partitions_of,
    spanning_forests,
    verify_disconnected_vanishing,
    verify_forest_identity,
    verify_moebius_consistency,
)
from lltlab.errors import NotDivisible
from lltlab.lltgraph import (
    LLTGraph,
    MeltingLollipop,
    SimpleGraph,
    complete_graph,
    disjoint_union,
    melting_lollipop_graph,
)
from lltlab.qpoly import ONE, Q, Q_MINUS_1
from lltlab.symfunc import SymPoly
from lltlab.theorem import lollipop_parameters
from lltlab.treebij import dyck_paths, schroder_to_graph

from oracles import cumulant_expr, expand_sympoly

K2 = LLTGraph(2, ed={(1, 2)})
K3 = LLTGraph(3, ed={(1, 2), (1, 3), (2, 3)})


def unicellular(max_m):
    return [schroder_to_graph(d) for k in range(1, max_m + 1) for d in dyck_paths(k)]


# -- set partitions ---------------------------------------------------------


def test_partition_counts():
    assert len(list(set_partitions(1))) == 1
    assert len(list(set_partitions(3))) == 5
    assert len(list(set_partitions(5))) == 52
    assert [bell(m) for m in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


def test_partitions_of_three_in_order():
    assert list(set_partitions(3)) == [
        ((1,), (2,), (3,)),
        ((1,), (2, 3)),
        ((1, 2), (3,)),
        ((1, 3), (2,)),
        ((1, 2, 3),),
    ]


@given(st.integers(1, 7))
def test_partitions_are_distinct_and_cover(m):
    parts = list(set_partitions(m))
    assert len(parts) == len(set(parts)) == bell(m)
    for p in parts:
        assert sorted(v for b in p for v in b) == list(range(1, m + 1))


def test_partitions_of_arbitrary_labels():
    assert list(set_partitions_of((4, 9))) == [((4,), (9,)), ((4, 9),)]


# -- cumulants --------------------------------------------------------------


def test_cumulant_examples():
    assert cumulant_of_graph(LLTGraph(1), 2) == SymPoly.monomial((1,), 2)
    assert cumulant_of_graph(K2, 2) == SymPoly.monomial((1, 1), 2)
    assert cumulant_of_graph(LLTGraph(2), 2) == SymPoly.zero(2)


def test_triangle_cumulant_value():
    # kappa(K_3) = m21 + (4 + q) m111, cross-checked against the brute-force oracle
    k = cumulant_of_graph(K3, 3)
    assert k == SymPoly(3, {(2, 1): ONE, (1, 1, 1): ONE.const(4) + Q})
    assert expand_sympoly(k) == cumulant_expr(K3, 3)


@pytest.mark.parametrize("g", unicellular(3) + [melting_lollipop_graph(MeltingLollipop(1, 3, 1))], ids=str)
def test_cumulant_matches_brute_force_oracle(g):
    assert expand_sympoly(cumulant_of_graph(g, g.n)) == cumulant_expr(g, g.n)


def test_sign_conventions_differ():
    both = printed_sign_comparison(2)
    assert both["blocks"] == SymPoly.monomial((1, 1), 2)
    assert both["printed"] == SymPoly.monomial((1, 1), 2).scale(-1)


def test_numerator_rejects_unknown_sign():
    with pytest.raises(ValueError):
        cumulant_numerator(K2, 2, sign="other")
    with pytest.raises(ValueError):
        cumulant_of_graph(K2, 2, method="other")


def test_non_divisible_numerator_is_reported():
    # a type I edge pointing out of a weak chain breaks symmetry, and with it divisibility
    g = LLTGraph(3, e1={(1, 3), (2, 3)})
    with pytest.raises(NotDivisible) as info:
        cumulant_of_graph(g, 3)
    assert "cumulant of" in str(info.value)


@pytest.mark.parametrize("g", unicellular(4) + [melting_lollipop_graph(p) for p in lollipop_parameters(5)], ids=str)
def test_closed_and_recursive_cumulants_agree(g):
    assert cumulant_of_graph(g, g.n, "closed") == cumulant_of_graph(g, g.n, "recursive")


@pytest.mark.parametrize("g", unicellular(4), ids=str)
def test_moebius_expansion_reassembles_llt(g):
    assert verify_moebius_consistency(g, g.n).holds


def test_moebius_examples():
    assert verify_moebius_consistency(LLTGraph(1), 1).holds
    rep = verify_moebius_consistency(K3, 3)
    assert rep.holds and len(rep.details["partitions"]) == 5
    assert verify_moebius_consistency(melting_lollipop_graph(MeltingLollipop(1, 2, 0)), 3).holds


def test_vanishing_examples():
    assert verify_disconnected_vanishing(LLTGraph(2), 2).holds
    assert verify_disconnected_vanishing(disjoint_union(K2, LLTGraph(1)), 3).holds
    assert verify_disconnected_vanishing(disjoint_union(K2, K2), 4).holds
    with pytest.raises(ValueError):
        verify_disconnected_vanishing(K2, 2)


def test_unions_of_unicellular_graphs_vanish():
    graphs = unicellular(3)
    rng = random.Random(11)
    for _ in range(20):
        a, b = rng.choice(graphs), rng.choice(graphs)
        if a.n + b.n <= 5:
            g = disjoint_union(a, b)
            assert cumulant_of_graph(g, g.n) == SymPoly.zero(g.n)


@given(st.sampled_from(unicellular(4)), st.data())
def test_relabeling_keeps_cumulant(g, data):
    perm = data.draw(st.permutations(list(g.vertices)))
    relabeled = g.relabel(dict(zip(g.vertices, perm)))
    assert cumulant_of_graph(relabeled, g.n) == cumulant_of_graph(g, g.n)


@pytest.mark.parametrize("g", unicellular(4), ids=str)
def test_connected_cumulants_are_divisible_and_homogeneous(g):
    num = cumulant_numerator(g, g.n)
    k = cumulant_of_graph(g, g.n)
    assert k.scale(Q_MINUS_1 ** (g.n - 1)) == num
    assert k.is_zero() or k.degrees() == {g.n}


# -- forests ----------------------------------------------------------------


def test_forest_examples():
    assert len(list(spanning_forests(complete_graph(2)))) == 2
    assert len(list(spanning_forests(complete_graph(3)))) == 7
    assert len(list(spanning_forests(SimpleGraph(3, {(1, 2), (2, 3)})))) == 4


def test_forest_components_group_edges():
    comps = forest_components(5, [(1, 3), (4, 5)])
    assert comps == [([1, 3], [(1, 3)]), ([2], []), ([4, 5], [(4, 5)])]


@pytest.mark.parametrize("m", range(1, 7))
def test_forest_count_matches_partition_sum(m):
    sg = complete_graph(m)
    assert len(list(spanning_forests(sg))) == forest_count_by_trees(sg)


@given(st.integers(1, 6), st.integers(0, 10**6))
def test_forests_are_acyclic_and_distinct(n, seed):
    rng = random.Random(seed)
    sg = SimpleGraph(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.5])
    forests = list(spanning_forests(sg))
    assert len(forests) == len(set(forests)) == forest_count_by_trees(sg)
    for f in forests:
        assert len(SimpleGraph(n, f).components()) == n - len(f)


@pytest.mark.parametrize("lmk", [(0, 1, 0), (0, 2, 0), (0, 3, 0), (2, 2, 1), (1, 3, 1)])
def test_forest_identity_small(lmk):
    rep = verify_forest_identity(MeltingLollipop(*lmk), sum(lmk[:2]))
    assert rep.holds, rep.witness


def test_forest_identity_counts_triangle_forests():
    assert verify_forest_identity(MeltingLollipop(0, 3, 0), 3).details["forests"] == 7
