from fractions import Fraction

import numpy as np
import pytest

from analytic import (
    BalancedIndicator,
    arc_kernel_rates,
    arc_kernel_report,
    fourier_transform,
    major_arc_energy,
    parseval_check,
    progression_measure_hat,
)
from analytic.fourier import power_of_two_at_least, relative_discrepancy
from core import DomainError, PreconditionError


@pytest.fixture
def random_indicators():
    rng = np.random.default_rng(42)
    indicators = []
    for _ in range(1000):
        N = int(rng.integers(1, 2049))
        size = int(rng.integers(0, N + 1))
        members = rng.choice(np.arange(1, N + 1), size=size, replace=False)
        indicators.append(BalancedIndicator(members.tolist(), N))
    return indicators


def test_balanced_indicator_sums_to_zero():
    f = BalancedIndicator([2, 3, 5], 8)
    assert f.alpha == Fraction(3, 8)
    assert f.values().sum() == pytest.approx(0.0)
    assert fourier_transform(f, 16)[0] == pytest.approx(0.0)


def test_parseval_known_values():
    assert parseval_check(BalancedIndicator(range(1, 11), 10), 32) == pytest.approx((0.0, 0.0))
    lhs, rhs = parseval_check(BalancedIndicator([1], 2), 4)
    assert lhs == pytest.approx(0.5)
    assert rhs == pytest.approx(0.5)
    with pytest.raises(PreconditionError):
        parseval_check(BalancedIndicator([1], 2), 3)


def test_parseval_on_random_sets(random_indicators):
    for f in random_indicators:
        lhs, rhs = parseval_check(f, power_of_two_at_least(2 * f.N))
        assert relative_discrepancy(lhs, rhs) <= 1e-9


def test_progression_measure_known_values():
    assert progression_measure_hat(0, 3, 5) == 1
    assert progression_measure_hat(Fraction(1, 4), 2, 7) == 1
    assert abs(progression_measure_hat(Fraction(1, 3), 1, 1)) < 1e-12


def test_progression_measure_matches_direct_sum():
    rng = np.random.default_rng(42)
    for _ in range(100):
        theta = float(rng.random())
        q, Q = int(rng.integers(1, 6)), int(rng.integers(1, 30))
        t = np.arange(-Q, Q + 1)
        direct = np.exp(-2j * np.pi * theta * q * q * t).mean()
        assert progression_measure_hat(theta, q, Q) == pytest.approx(direct, abs=1e-9)


def test_major_arc_energy_is_part_of_the_total():
    rng = np.random.default_rng(42)
    members = np.flatnonzero(rng.random(300) < 0.4) + 1
    f = BalancedIndicator(members.tolist(), 300)
    total, _ = parseval_check(f, 1024)
    for q in (1, 2, 3):
        energy = major_arc_energy(f, q, 10, M=1024)
        assert 0 <= energy <= total + 1e-9


def test_arc_kernel_report():
    report = arc_kernel_report(q_max=3, Q=10, M=1024, half_length=2)
    assert list(report.columns) == ["q", "j", "theta", "magnitude", "bound", "ok"]
    assert set(report["q"]) == {1, 2, 3}
    assert report.loc[report["j"] == 0, "magnitude"].iloc[0] == pytest.approx(1.0)
    with pytest.raises(DomainError):
        arc_kernel_report(q_max=5, Q=4, M=64)


def test_arc_kernel_rates_with_matching_progression():
    report = arc_kernel_report(q_max=5, Q=10, M=4096)
    rates = arc_kernel_rates(report)
    assert rates["q"].tolist() == [1, 2, 3, 4, 5]
    assert (rates["points"] > 0).all()
    assert rates["points"].sum() == len(report)
    assert rates["met"].sum() == report["ok"].sum()
    np.testing.assert_allclose(rates["bound"], 0.1 / rates["q"])
    assert ((rates["rate"] >= 0) & (rates["rate"] <= 1)).all()
    # theta = 0 sits on the arc of q = 1 and the kernel is 1 there
    assert rates.loc[rates["q"] == 1, "min_magnitude"].iloc[0] <= 1.0
    assert report.loc[(report["q"] == 1) & (report["j"] == 0), "ok"].all()
