import pytest

from configs import settings
from core import Budget, CapacityError, DomainError
from counting import fs_extremal, is_square_difference_free
from counting.extremal import neighbour_masks


def test_small_values():
    assert fs_extremal(1).size == 1
    assert fs_extremal(2).size == 1
    result = fs_extremal(5)
    assert result.size == 2
    assert result.optimal
    assert result.to_text().startswith("size 2\nwitness ")


def test_neighbour_masks_are_symmetric():
    masks = neighbour_masks(30)
    for v in range(30):
        for u in range(30):
            assert ((masks[v] >> u) & 1) == ((masks[u] >> v) & 1)
    # points 1 and 5 differ by 4
    assert (masks[0] >> 4) & 1


def test_methods_agree():
    for n in range(1, 41):
        bnb = fs_extremal(n, budget=Budget.unlimited(), method="branch-and-bound")
        dp = fs_extremal(n, budget=Budget.unlimited(), method="dp")
        assert bnb.size == dp.size
        assert bnb.optimal and dp.optimal
        for result in (bnb, dp):
            assert len(result.witness) == result.size
            assert is_square_difference_free(result.witness)
            assert all(1 <= v <= n for v in result.witness)


def test_sizes_never_shrink():
    sizes = [fs_extremal(n, budget=Budget.unlimited()).size for n in range(1, 41)]
    assert sizes == sorted(sizes)


@pytest.mark.parametrize("method", ["branch-and-bound", "dp"])
def test_exhausted_budget_returns_valid_set(method):
    result = fs_extremal(30, budget=Budget(nodes=5), method=method)
    assert not result.optimal
    assert result.to_text().startswith("size_lower_bound")
    assert is_square_difference_free(result.witness)


def test_bad_arguments():
    with pytest.raises(DomainError):
        fs_extremal(0)
    with pytest.raises(DomainError):
        fs_extremal(10, method="greedy")
    with pytest.raises(CapacityError):
        fs_extremal(settings.extremal_exact_threshold + 1)
