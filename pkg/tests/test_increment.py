from fractions import Fraction
from math import ceil

import numpy as np
import pytest

import directories
from analytic import Branch, density_increment_iterate, increment_search
from analytic.increment import further_integer
from core import DomainError


@pytest.fixture
def thirds():
    """Residue class 1 mod 3 inside [1, 3000]."""
    return [x for x in range(1, 3001) if x % 3 == 1]


def test_interval_has_many_solutions():
    outcome = increment_search(range(1, 101), 100, 9, 1)
    assert outcome.branch == Branch.MANY_SOLUTIONS
    assert outcome.count == 286
    assert outcome.threshold == pytest.approx(150.0)
    assert outcome.to_text() == "many-solutions count=286 threshold=150.0"


def test_residue_class_gives_an_increment(thirds):
    outcome = increment_search(thirds, 3000, 8, 3)
    assert outcome.branch == Branch.INCREMENT
    assert (outcome.q, outcome.length, outcome.offset) == (3, 2, -8)
    assert outcome.new_density == 1.0
    assert outcome.new_density > outcome.alpha + outcome.alpha**3
    assert outcome.arc_energy >= 0
    # the progression stays inside [1, N]
    assert outcome.offset + outcome.q**2 >= 1
    assert outcome.offset + outcome.q**2 * outcome.length <= 3000


def test_large_further_integer():
    outcome = increment_search(range(1, 51), 50, 50, 4)
    assert outcome.branch == Branch.FURTHER_TOO_LARGE
    assert outcome.to_text() == "further-too-large alpha=1.0 n_prime=50"


def test_bad_arguments():
    with pytest.raises(DomainError):
        increment_search([], 10, 2, 1)
    with pytest.raises(DomainError):
        increment_search([11], 10, 2, 1)
    with pytest.raises(DomainError):
        increment_search([1, 2], 10, 11, 1)
    with pytest.raises(DomainError):
        increment_search([1, 2], 10, 2, 0)


def test_further_integer():
    assert further_integer(1, 100) == 99
    assert further_integer(0.01, 100) == 1


def test_iteration_on_an_interval_stops_at_once():
    iteration = density_increment_iterate(range(1, 101), 100)
    assert (iteration.r, iteration.L, iteration.L_prime) == (1, 100, 99)
    assert iteration.reason == "many-solutions"
    assert len(iteration.stages) == 1
    assert iteration.members == list(range(1, 101))


def test_iteration_climbs_into_residue_class(thirds):
    iteration = density_increment_iterate(thirds, 3000)
    first, last = iteration.stages
    assert first.branch == Branch.INCREMENT
    assert (last.d, last.N, last.x, last.alpha) == (3, 2, -8, 1.0)
    assert iteration.reason == "saturated"
    assert (iteration.r, iteration.L, iteration.L_prime) == (3, 2, 1)
    assert iteration.members == [1, 10]


def test_iteration_matches_golden_trace():
    iteration = density_increment_iterate(range(5, 17), 16)
    expected = directories.golden_increment_trace.read_text()
    assert iteration.to_text() + "\n" == expected


def test_iteration_length_is_bounded():
    rng = np.random.default_rng(42)
    for _ in range(20):
        N = int(rng.integers(50, 400))
        members = (np.flatnonzero(rng.random(N) < rng.uniform(0.2, 0.9)) + 1).tolist()
        if not members:
            continue
        alpha = Fraction(len(members), N)
        iteration = density_increment_iterate(members, N)
        assert len(iteration.stages) <= ceil(1 / alpha**3) + 1
        assert set(iteration.members) <= set(members)
        assert 1 <= iteration.L_prime <= max(1, iteration.L)
