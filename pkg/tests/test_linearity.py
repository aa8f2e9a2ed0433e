import pytest
from hypothesis import given, settings, strategies as st

from conftest import ideals
from oracles import brute_has_linear_quotients, linearly_related_by_betti, random_equigenerated
from shiftlab.betti import hs
from shiftlab.errors import ContractViolation, UndefinedInputError
from shiftlab.linearity import (
    AdmissibleOrder,
    SearchStatus,
    admissible_sets,
    check_order,
    colon_by_rest,
    find_linear_quotients_order,
    generator_graph,
    has_linear_quotients,
    hs_via_linear_quotients,
    is_linearly_related,
    is_variable_generated,
    unconnected_pairs,
)
from shiftlab.monomial import MonomialIdeal, maximal_ideal, power
from shiftlab.syntax import parse_ideal


def test_maximal_ideal_power_has_lex_order():
    I = power(maximal_ideal(3), 2)
    res = find_linear_quotients_order(I)
    assert res.status is SearchStatus.FOUND and res.nodes == 1
    assert res.order.set_of((2, 0, 0)) == frozenset()
    assert res.order.set_of((0, 0, 2)) == frozenset({1, 2})


def test_two_disjoint_edges_have_no_linear_quotients():
    I = parse_ideal("E(4; 1-2, 3-4)")
    res = find_linear_quotients_order(I)
    assert res.status is SearchStatus.NONE_EXISTS
    assert has_linear_quotients(I) is False
    assert not is_linearly_related(I)
    assert unconnected_pairs(I) == [((1, 1, 0, 0), (0, 0, 1, 1))]


def test_search_beyond_lex_order():
    # lex order puts x2*x3 before x3*x4, leaving (x1*x4) : x2*x3 = (x1*x4)
    I = parse_ideal("(x1*x4, x2*x3, x3*x4, x4^2)")
    assert admissible_sets(I, list(I.gens)) is None
    res = find_linear_quotients_order(I)
    assert res.found
    check_order(I, res.order.order)


def test_budget_exhaustion():
    I = parse_ideal("E(4; 1-2, 3-4)")
    res = find_linear_quotients_order(I, budget=0)
    assert res.status is SearchStatus.BUDGET_EXHAUSTED
    assert has_linear_quotients(I, budget=0) is None


def test_contract_violations():
    I = power(maximal_ideal(2), 2)
    with pytest.raises(ContractViolation):
        admissible_sets(I, [(2, 0)])
    bogus = AdmissibleOrder(((0, 2), (1, 1), (2, 0)), (frozenset(), frozenset({2}), frozenset({1})))
    with pytest.raises(ContractViolation):
        hs_via_linear_quotients(I, bogus, 1)
    with pytest.raises(UndefinedInputError):
        generator_graph(MonomialIdeal(2, ((1, 0), (0, 2))))


def test_colon_by_rest():
    I = parse_ideal("(x*y, y*z, x*z^2)")
    assert colon_by_rest(I, (1, 0, 2)).gens == ((0, 1, 0),)
    assert is_variable_generated(colon_by_rest(I, (1, 0, 2)))
    assert not is_variable_generated(colon_by_rest(parse_ideal("E(4; 1-2, 3-4)"), (0, 0, 1, 1)))


def test_generator_graph_path():
    I = parse_ideal("E(4; 1-2, 2-3, 3-4)")
    G = generator_graph(I)
    assert len(G.edges) == 2
    assert G.neighbours((0, 1, 1, 0)) == {(1, 1, 0, 0), (0, 0, 1, 1)}
    assert is_linearly_related(I)


@settings(max_examples=80)
@given(ideals(n_max=4, max_gens=5))
def test_search_agrees_with_all_permutations(I):
    if I.is_unit():
        return
    assert has_linear_quotients(I) == brute_has_linear_quotients(I)


@settings(max_examples=80)
@given(ideals(n_max=4, max_gens=6))
def test_hs_from_linear_quotients_matches_betti(I):
    if I.is_unit():
        return
    res = find_linear_quotients_order(I)
    if not res.found:
        return
    for i in range(I.n):
        assert hs_via_linear_quotients(I, res.order, i) == hs(I, i)


@given(st.integers(2, 4), st.integers(1, 3), st.integers(1, 7), st.randoms(use_true_random=False))
def test_linear_relation_matches_betti(n, d, m, rng):
    I = random_equigenerated(rng, n, d, m)
    assert is_linearly_related(I) == linearly_related_by_betti(I)
