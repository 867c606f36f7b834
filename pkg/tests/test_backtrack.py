import pytest

from core import Budget, CapacityError, DomainError, verify_colouring
from search import Status, compute_S, feasible

SEARCH_BUDGET = Budget(nodes=200_000)


def test_one_colour():
    assert feasible(1, 1).status == Status.COLOURABLE
    assert feasible(1, 2).status == Status.NOT_COLOURABLE
    value = compute_S(1, budget=Budget.unlimited())
    assert value.exact
    assert value.to_text() == "value 1"


def test_two_colours_stop_at_eight():
    assert feasible(2, 8, budget=Budget.unlimited()).status == Status.COLOURABLE
    assert feasible(2, 9, budget=Budget.unlimited()).status == Status.NOT_COLOURABLE
    value = compute_S(2, budget=Budget.unlimited())
    assert (value.value, value.exact) == (8, True)
    assert len(value.witness) == 8


def test_witnesses_are_clean():
    for k in (1, 2, 3):
        for n in range(1, 41):
            outcome = feasible(k, n, budget=SEARCH_BUDGET)
            if outcome.status == Status.COLOURABLE:
                assert len(outcome.witness) == n
                assert verify_colouring(outcome.colouring).clean


def test_symmetry_breaking_keeps_verdicts():
    for k in (1, 2, 3):
        for n in range(1, 21):
            broken = feasible(k, n, budget=SEARCH_BUDGET, symmetry_breaking=True)
            full = feasible(k, n, budget=SEARCH_BUDGET, symmetry_breaking=False)
            if Status.UNKNOWN not in (broken.status, full.status):
                assert broken.status == full.status


def test_colourability_is_monotone():
    statuses = [feasible(2, n, budget=Budget.unlimited()).status for n in range(1, 13)]
    first_failure = statuses.index(Status.NOT_COLOURABLE)
    assert all(status == Status.COLOURABLE for status in statuses[:first_failure])
    assert all(status == Status.NOT_COLOURABLE for status in statuses[first_failure:])


def test_three_colours_reach_the_construction():
    value = compute_S(3, budget=Budget(nodes=20_000))
    assert value.value >= 16


def test_exhausted_budget_is_unknown():
    outcome = feasible(2, 8, budget=Budget(nodes=0))
    assert outcome.status == Status.UNKNOWN
    assert outcome.witness is None
    assert outcome.to_text().startswith("unknown k=2 n=8")


def test_bad_arguments():
    with pytest.raises(DomainError):
        feasible(0, 5)
    with pytest.raises(DomainError):
        feasible(2, 0)
    with pytest.raises(CapacityError):
        feasible(2, 2**40)
