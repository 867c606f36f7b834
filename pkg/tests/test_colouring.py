import numpy as np
import pytest

from core import CapacityError, Colouring, InvariantError, Run
from core.sets import bitmask, format_set, parse_set


@pytest.fixture
def runs_colouring():
    return Colouring.from_runs([(1, 1, 0), (2, 4, 1), (5, 16, 2)])


def test_runs_and_explicit_forms_agree(runs_colouring):
    explicit = runs_colouring.to_explicit()
    assert explicit.is_explicit
    assert explicit.assignment[:5] == (0, 1, 1, 1, 2)
    assert explicit == runs_colouring
    assert explicit.to_runs().runs == runs_colouring.runs
    assert [runs_colouring.colour_of(x) for x in (1, 4, 5, 16)] == [0, 1, 2, 2]


def test_canonical_runs_merge_neighbours():
    colouring = Colouring.from_runs([(1, 2, 0), (3, 5, 0), (6, 6, 1)])
    assert colouring.canonical_runs() == (Run(1, 5, 0), Run(6, 6, 1))
    assert colouring.class_runs(0) == [(1, 5)]


def test_as_array_and_classes(runs_colouring):
    array = runs_colouring.as_array()
    assert array[0] == -1
    assert len(array) == 17
    classes = runs_colouring.classes()
    np.testing.assert_array_equal(classes[1], [2, 3, 4])
    assert sum(len(members) for members in classes) == 16


def test_text_form_round_trips(runs_colouring):
    assert runs_colouring.to_text() == "16 3\nR\n1 1 0\n2 4 1\n5 16 2\n"
    assert Colouring.from_text(runs_colouring.to_text()) == runs_colouring
    explicit = Colouring.from_text("4 2\nE\n0 1 1\n1\n")
    assert explicit.assignment == (0, 1, 1, 1)


@pytest.mark.parametrize(
    "text",
    [
        "3 2\nE\n0 1\n",  # too few colours
        "3 2\nE\n0 1 2\n",  # colour out of range
        "5 2\nR\n1 2 0\n4 5 1\n",  # gap in runs
        "5 2\nR\n1 2 0\n3 4 1\n",  # short of n
        "5 2\nX\n",
        "five 2\nE\n",
        "0 1\nE\n\n",
    ],
)
def test_malformed_text_is_rejected(text):
    with pytest.raises(InvariantError):
        Colouring.from_text(text)


def test_huge_run_colouring_stays_symbolic():
    n = 2**64
    colouring = Colouring.from_runs([(1, 1, 0), (2, n, 1)])
    assert colouring.colour_of(n) == 1
    with pytest.raises(CapacityError):
        colouring.to_explicit()


def test_set_files():
    assert parse_set("1\n4\n\n9\n") == [1, 4, 9]
    assert format_set([9, 1, 4, 4]) == "1\n4\n9\n"
    assert bitmask([3, 5], offset=3) == 0b101
    with pytest.raises(InvariantError):
        parse_set("4\n1\n")
    with pytest.raises(InvariantError):
        parse_set("1\nseven\n")
