import logging
from fractions import Fraction
from math import floor, pi, sin
from typing import Iterable, Optional, Tuple

import numpy as np
import pandas as pd

from analytic.approximation import Real, as_fraction, major_arc_mask
from configs import settings
from core.errors import DomainError, PreconditionError

logger = logging.getLogger(__name__)


class BalancedIndicator:
    """f = 1_A - alpha 1_[N] with alpha = |A| / N; sums to zero over the integers."""

    def __init__(self, members: Iterable[int], N: int):
        if N < 1:
            raise DomainError(f"N must be a natural number, got {N}.")
        self.members = sorted(set(int(m) for m in members))
        if self.members and (self.members[0] < 1 or self.members[-1] > N):
            raise DomainError(f"A must lie in [1, {N}].")
        self.N = N
        self.alpha = Fraction(len(self.members), N)

    def values(self) -> np.ndarray:
        """f(1), ..., f(N)."""
        f = np.full(self.N, -float(self.alpha))
        if self.members:
            f[np.asarray(self.members, dtype=np.int64) - 1] += 1.0
        return f

    def __repr__(self):
        return f"BalancedIndicator(|A|={len(self.members)}, N={self.N})"


def fourier_transform(f: BalancedIndicator, M: int) -> np.ndarray:
    """f^(j/M) = sum_n f(n) e(-n j / M) for j = 0, ..., M - 1."""
    if M < 1:
        raise DomainError(f"M must be at least 1, got {M}.")
    folded = np.zeros(M)
    np.add.at(folded, np.arange(1, f.N + 1) % M, f.values())
    return np.fft.fft(folded)


def parseval_check(f: BalancedIndicator, M: int) -> Tuple[float, float]:
    """(sum of f(n)², grid average of |f^|²); equal whenever M >= 2N."""
    if M < 2 * f.N:
        raise PreconditionError(f"M={M} must be at least 2N={2 * f.N}.")
    values = f.values()
    lhs = float(np.dot(values, values))
    rhs = float(np.sum(np.abs(fourier_transform(f, M)) ** 2) / M)
    return lhs, rhs


def relative_discrepancy(lhs: float, rhs: float) -> float:
    return abs(lhs - rhs) / max(abs(lhs), 1.0)


def progression_measure_hat(theta: Real, q: int, Q: int) -> complex:
    """Fourier transform of the uniform measure on q²·{-Q, ..., Q}."""
    if q < 1 or Q < 1:
        raise DomainError(f"q and Q must be at least 1, got q={q}, Q={Q}.")
    phase = as_fraction(theta) * q * q
    phase -= floor(phase)
    if phase == 0:
        return complex(1.0)
    length = 2 * Q + 1
    return complex(sin(length * pi * float(phase)) / (length * sin(pi * float(phase))))


def power_of_two_at_least(value: int) -> int:
    return 1 << max(0, (value - 1).bit_length())


def major_arc_energy(f: BalancedIndicator, q: int, Q: int, M: Optional[int] = None) -> float:
    """Riemann sum of |f^|² over the major arc of q on the grid j/M."""
    M = M or power_of_two_at_least(2 * f.N)
    energy = np.abs(fourier_transform(f, M)) ** 2
    return float(energy[major_arc_mask(M, q, Q)].sum() / M)


def arc_kernel_report(
    q_max: int, Q: int, M: int, half_length: Optional[int] = None, constant: Optional[float] = None
) -> pd.DataFrame:
    """|m_P^(theta)| against constant / q on every grid point of every major arc q <= q_max.

    ``half_length`` is the Q of the progression q²·{-Q, ..., Q}; it defaults to the arc parameter.
    """
    if not 1 <= q_max <= Q:
        raise DomainError(f"need 1 <= q_max <= Q, got q_max={q_max}, Q={Q}.")
    constant = settings.arc_constant if constant is None else constant
    half_length = half_length or Q
    rows = []
    for q in range(1, q_max + 1):
        for j in np.flatnonzero(major_arc_mask(M, q, Q)):
            magnitude = abs(progression_measure_hat(Fraction(int(j), M), q, half_length))
            rows.append({"q": q, "j": int(j), "theta": j / M, "magnitude": magnitude})
    report = pd.DataFrame(rows, columns=["q", "j", "theta", "magnitude"])
    report["bound"] = constant / report["q"]
    report["ok"] = report["magnitude"] >= report["bound"]
    if len(report):
        logger.info(f"arc kernel bound met on {report['ok'].mean():.3%} of {len(report)} points")
    return report


def arc_kernel_rates(report: pd.DataFrame) -> pd.DataFrame:
    """Per-q share of arc points meeting the bound, from ``arc_kernel_report``."""
    rates = report.groupby("q", as_index=False).agg(
        points=("ok", "size"), met=("ok", "sum"), min_magnitude=("magnitude", "min")
    )
    rates["bound"] = report.groupby("q")["bound"].first().to_numpy()
    rates["rate"] = rates["met"] / rates["points"]
    failing = rates.loc[rates["rate"] < 1, "q"].tolist()
    if failing:
        logger.warning(f"arc kernel bound missed on part of the arcs of q={failing}")
    return rates
