import pytest

from core import Budget, Colouring, count_solutions, verify_colouring
from search import Status, build_cnf, decode_model, encode_cnf, feasible, feasible_via_cnf
from search import dpll
from search.cnf import agrees, parse_dimacs, variable


def test_encoding_of_one_colour_on_two_points():
    assert encode_cnf(1, 2) == "p cnf 2 3\n1 0\n2 0\n-2 -1 0\n"
    assert encode_cnf(1, 1) == "p cnf 1 1\n1 0\n"


def test_encoding_sizes():
    cnf = build_cnf(3, 10)
    assert cnf.num_vars == 30
    # 10 at-least-one clauses and one clause per solution and colour
    assert len(cnf.clauses) == 10 + 3 * count_solutions(10)
    with_amo = build_cnf(3, 10, at_most_one=True)
    assert len(with_amo.clauses) == len(cnf.clauses) + 10 * 3


def test_dimacs_round_trip():
    text = encode_cnf(2, 12, at_most_one=True)
    assert parse_dimacs("c comment\n" + text).to_dimacs() == text


def test_decode_model_takes_least_true_colour():
    model = [variable(1, 0, 2), variable(1, 1, 2), -variable(2, 0, 2), variable(2, 1, 2)]
    assert decode_model(model, k=2, n=2) == Colouring.explicit([0, 1], k=2)


def test_dpll_on_small_formulas():
    assert dpll.solve([[1, 2], [-1], [-2, 3]], 3) == [-1, 2, 3]
    assert dpll.solve([[1], [-1]], 1) is None
    assert dpll.solve([[]], 1) is None


def test_dpll_agrees_with_backtracking():
    for k in (1, 2):
        for n in range(1, 41):
            backtrack = feasible(k, n, budget=Budget.unlimited())
            via_cnf = feasible_via_cnf(k, n, engine="dpll", budget=Budget.unlimited())
            assert agrees([backtrack, via_cnf])
            assert via_cnf.status != Status.UNKNOWN
            if via_cnf.status == Status.COLOURABLE:
                assert verify_colouring(via_cnf.colouring).clean


@pytest.mark.parametrize("n", [5, 10, 16, 25])
def test_dpll_finds_three_colourings(n):
    outcome = feasible_via_cnf(3, n, engine="dpll", budget=Budget(nodes=500_000))
    assert outcome.status in (Status.COLOURABLE, Status.UNKNOWN)
    if outcome.status == Status.COLOURABLE:
        assert verify_colouring(outcome.colouring).clean


def test_three_colour_verdicts_agree():
    budget = Budget(nodes=500_000)
    for n in range(1, 26):
        backtrack = feasible(3, n, budget=budget)
        via_cnf = feasible_via_cnf(3, n, engine="dpll", budget=budget)
        assert agrees([backtrack, via_cnf])


def test_dpll_respects_budget():
    outcome = feasible_via_cnf(2, 30, engine="dpll", budget=Budget(nodes=0))
    assert outcome.status == Status.UNKNOWN


def test_pysat_agrees_with_backtracking():
    pytest.importorskip("pysat")
    for n in (8, 9, 20):
        backtrack = feasible(2, n, budget=Budget.unlimited())
        sat = feasible_via_cnf(2, n, engine="sat", budget=Budget.unlimited())
        assert sat.status == backtrack.status
