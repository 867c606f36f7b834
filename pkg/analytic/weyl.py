import logging
from fractions import Fraction
from math import isqrt, log, sqrt
from typing import Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict

from analytic.approximation import Real, as_fraction, diophantine_approx
from configs import settings
from core.errors import DomainError
from utils import parallel_map

logger = logging.getLogger(__name__)

EXACT_DENOMINATOR = 2**31


class WeylEvaluation(BaseModel):
    """T(theta) for the squares up to N'."""

    model_config = ConfigDict(frozen=True)

    theta: str
    n_prime: int
    real: float
    imag: float

    @property
    def value(self) -> complex:
        return complex(self.real, self.imag)

    @property
    def magnitude(self) -> float:
        return abs(self.value)

    def to_text(self) -> str:
        return f"{self.theta} {self.n_prime} {self.real!r} {self.imag!r} {self.magnitude!r}"


def _phases(theta: Real, squares: np.ndarray) -> np.ndarray:
    """theta * z² mod 1, exact in integers when theta is a small-denominator rational."""
    if not isinstance(theta, float):
        value = as_fraction(theta)
        if value.denominator < EXACT_DENOMINATOR:
            den = value.denominator
            residues = ((value.numerator % den) * (squares % den)) % den
            return residues / den
        theta = float(value)
    return np.mod(theta * squares.astype(np.float64), 1.0)


def weyl_sum(theta: Real, n_prime: int) -> complex:
    """T(theta) = sum over 1 <= z <= isqrt(N') of e(-theta z²), by direct summation."""
    if n_prime < 1:
        raise DomainError(f"N' must be at least 1, got {n_prime}.")
    zs = np.arange(1, isqrt(n_prime) + 1, dtype=np.int64)
    phases = _phases(theta, zs * zs)
    return complex(np.exp(-2j * np.pi * phases).sum())


def evaluate_weyl(theta: Real, n_prime: int) -> WeylEvaluation:
    value = weyl_sum(theta, n_prime)
    return WeylEvaluation(theta=str(theta), n_prime=n_prime, real=value.real, imag=value.imag)


def grid_size(n_prime: int) -> int:
    """Smallest power of two >= 4 N'."""
    return 1 << max(0, (4 * n_prime - 1).bit_length())


def weyl_grid(n_prime: int, M: Optional[int] = None) -> np.ndarray:
    """T(j/M) for j = 0, ..., M - 1 as one FFT of the square-residue histogram mod M."""
    if n_prime < 1:
        raise DomainError(f"N' must be at least 1, got {n_prime}.")
    M = M or grid_size(n_prime)
    zs = np.arange(1, isqrt(n_prime) + 1, dtype=np.int64)
    histogram = np.bincount((zs * zs) % M, minlength=M).astype(np.float64)
    return np.fft.fft(histogram)


def weyl_envelope(theta: Real, n_prime: int, constant: Optional[float] = None):
    """Empirical right-hand side of Weyl's inequality at theta.

    Returns:
        tuple: (envelope, a, q) with a/q = diophantine_approx(theta, isqrt(N')).
    """
    constant = settings.envelope_constant if constant is None else constant
    a, q = diophantine_approx(theta, max(1, isqrt(n_prime)))
    shape = sqrt(n_prime / q) + sqrt(sqrt(n_prime) * log(q + 1)) + sqrt(q * log(q + 1))
    return constant * shape, a, q


def weyl_envelope_report(
    n_prime: int,
    M: Optional[int] = None,
    constant: Optional[float] = None,
    threads: Optional[int] = None,
) -> pd.DataFrame:
    """|T(j/M)| against the trivial bound and the Weyl envelope on every grid point."""
    M = M or settings.weyl_grid_size
    magnitudes = np.abs(weyl_grid(n_prime, M))
    trivial = isqrt(n_prime)
    tolerance = 1e-9 * sqrt(n_prime)

    def row(j: int) -> dict:
        envelope, a, q = weyl_envelope(Fraction(j, M), n_prime, constant)
        return {"j": j, "theta": j / M, "a": a, "q": q, "envelope": envelope}

    rows = parallel_map(row, range(M), threads=threads)
    report = pd.DataFrame(rows)
    report["magnitude"] = magnitudes
    report["trivial_bound"] = trivial
    report["trivial_ok"] = report["magnitude"] <= trivial + tolerance
    report["envelope_ok"] = report["magnitude"] <= report["envelope"]

    violations = int((~report["envelope_ok"]).sum())
    if violations:
        logger.warning(f"weyl envelope fails at {violations}/{M} grid points for N'={n_prime}")
    else:
        logger.info(f"weyl envelope holds on all {M} grid points for N'={n_prime}")
    return report
