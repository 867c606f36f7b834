from math import isqrt

import pytest

from core import CapacityError, count_solutions, enumerate_solutions, is_solution
from core.solutions import ceil_sqrt


def test_small_solution_sets():
    assert enumerate_solutions(1) == []
    assert enumerate_solutions(2) == [(2, 1, 1)]
    assert enumerate_solutions(5) == [(2, 1, 1), (3, 2, 1), (4, 3, 1), (5, 4, 1), (5, 1, 2)]


def test_closed_form_matches_enumeration():
    for n in range(1, 501):
        assert len(enumerate_solutions(n)) == count_solutions(n)


def test_enumeration_is_sorted_and_valid():
    triples = enumerate_solutions(300)
    assert triples == sorted(triples)
    assert all(is_solution(x, y, z, 300) for x, y, z in triples)


def test_count_of_huge_interval_is_exact():
    n = 2**64
    m = isqrt(n - 1)
    assert count_solutions(n) == m * n - m * (m + 1) * (2 * m + 1) // 6


def test_is_solution_rejects_points_outside_interval():
    assert is_solution(5, 1, 2, 5)
    assert not is_solution(5, 1, 2, 4)
    assert not is_solution(1, 0, 1, 5)
    assert not is_solution(6, 1, 2, 10)


def test_ceil_sqrt():
    assert [ceil_sqrt(m) for m in (0, 1, 2, 4, 5, 9, 10)] == [0, 1, 2, 2, 3, 3, 4]


def test_enumeration_refuses_huge_intervals():
    with pytest.raises(CapacityError):
        enumerate_solutions(2**40)
