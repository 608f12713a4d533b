import pytest

from lltlab.cumulant import cumulant_of_graph
from lltlab.lltgraph import LLTGraph, MeltingLollipop, melting_lollipop_graph
from lltlab.qpoly import ONE
from lltlab.symfunc import SymPoly
from lltlab.theorem import (
    lollipop_parameters,
    sweep,
    tree_sum,
    verify_corollary_1_3,
    verify_schur_positivity,
    verify_theorem_1_2,
)


def test_lollipop_examples():
    for lmk, n in [((0, 1, 0), 1), ((0, 2, 0), 2), ((1, 2, 0), 3)]:
        rep = verify_theorem_1_2(MeltingLollipop(*lmk), n)
        assert rep.holds, rep.witness
    g = melting_lollipop_graph(MeltingLollipop(0, 2, 0))
    assert tree_sum(g, 2) == (SymPoly.monomial((1, 1), 2), 1)


def test_complete_graph_examples():
    one = verify_corollary_1_3(1)
    assert one.holds and one.details["cayley_trees"] == 1
    two = verify_corollary_1_3(2, 2)
    assert two.holds and two.details["parking_functions"] == 1
    four = verify_corollary_1_3(4)
    assert four.holds
    assert four.details["cayley_trees"] == four.details["parking_functions"] == four.details["matrix_tree"] == 16


def test_schur_positivity_examples():
    k2 = verify_schur_positivity(LLTGraph(2, ed={(1, 2)}), 2)
    assert k2.holds and k2.details["schur"] == [{"partition": [1, 1], "q_coeffs": ["1"]}]
    dot = verify_schur_positivity(LLTGraph(1), 1)
    assert dot.details["schur"] == [{"partition": [1], "q_coeffs": ["1"]}]
    assert verify_schur_positivity(melting_lollipop_graph(MeltingLollipop(1, 3, 1)), 4).holds


def test_negative_schur_coefficient_is_a_witness(monkeypatch):
    import lltlab.theorem

    fake = SymPoly.monomial((1, 1), 2, ONE.const(-1))
    monkeypatch.setattr(lltlab.theorem, "cumulant_of_graph", lambda g, n: fake)
    rep = verify_schur_positivity(LLTGraph(2, ed={(1, 2)}), 2)
    assert not rep.holds
    assert rep.witness == {"negative": [{"partition": [1, 1], "q_coeffs": ["-1"]}]}


def test_parameter_enumeration():
    assert lollipop_parameters(1) == [MeltingLollipop(0, 1, 0)]
    two = lollipop_parameters(2)
    assert two == [MeltingLollipop(0, 1, 0), MeltingLollipop(0, 2, 0), MeltingLollipop(0, 2, 1),
                   MeltingLollipop(1, 1, 0)]
    assert sum(1 for p in lollipop_parameters(7) if p.size == 7) == 28


def test_sweep_small():
    reports = sweep(2, jobs=1)
    assert len(reports) == 4 * 4
    assert all(r.holds for r in reports)
    with pytest.raises(ValueError):
        sweep(0)


def test_sweep_parallel_matches_serial():
    serial = [r.to_json(timing=False) for r in sweep(3, jobs=1)]
    parallel = [r.to_json(timing=False) for r in sweep(3, jobs=2)]
    assert serial == parallel


@pytest.mark.parametrize("m", range(2, 6))
def test_isolated_vertex_makes_both_sides_vanish(m):
    p = MeltingLollipop(0, m, m - 1)
    g = melting_lollipop_graph(p)
    assert cumulant_of_graph(g, m) == SymPoly.zero(m)
    assert tree_sum(g, m) == (SymPoly.zero(m), 0)
    assert verify_theorem_1_2(p).holds


@pytest.mark.parametrize("p", lollipop_parameters(5), ids=lambda p: f"l{p.l}m{p.m}k{p.k}")
def test_both_sides_homogeneous(p):
    g = melting_lollipop_graph(p)
    lhs = cumulant_of_graph(g, p.size)
    rhs, _ = tree_sum(g, p.size)
    assert lhs == rhs
    assert lhs.is_zero() or lhs.degrees() == {p.size}


@pytest.mark.parametrize("lmk", [(0, 2, 0), (1, 2, 0), (0, 3, 1), (2, 2, 0)])
def test_extra_variables_do_not_matter(lmk):
    p = MeltingLollipop(*lmk)
    assert verify_theorem_1_2(p, p.size).holds and verify_theorem_1_2(p, p.size + 1).holds


def test_report_json_is_canonical():
    rep = verify_theorem_1_2(MeltingLollipop(1, 2, 0))
    text = rep.to_json(timing=False)
    assert text == verify_theorem_1_2(MeltingLollipop(1, 2, 0)).to_json(timing=False)
    assert text.startswith('{"claim": "theorem_1_2", "details": {"spanning_trees": 1}')
