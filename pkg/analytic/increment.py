import logging
from enum import Enum
from fractions import Fraction
from math import ceil, floor, isqrt, log, sqrt
from typing import Iterable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from analytic.fourier import BalancedIndicator, major_arc_energy, power_of_two_at_least
from configs import settings
from core.errors import DomainError
from counting.differences import trilinear_count
from counting.progressions import best_translate
from utils import parallel_map

logger = logging.getLogger(__name__)


class Branch(str, Enum):
    FURTHER_TOO_LARGE = "further-too-large"
    MANY_SOLUTIONS = "many-solutions"
    INCREMENT = "increment"
    NO_BRANCH = "no-branch"


class IncrementOutcome(BaseModel):
    """Which alternative of the increment trichotomy holds for (A, N, N')."""

    model_config = ConfigDict(frozen=True)

    branch: Branch
    n: int
    n_prime: int
    alpha: float
    count: Optional[int] = None
    threshold: Optional[float] = None
    q: Optional[int] = None
    length: Optional[int] = None
    offset: Optional[int] = None
    hits: Optional[int] = None
    new_density: Optional[float] = None
    arc_energy: Optional[float] = None

    def to_text(self) -> str:
        if self.branch == Branch.INCREMENT:
            return (
                f"{self.branch.value} q={self.q} length={self.length} offset={self.offset} "
                f"new_density={self.new_density!r}"
            )
        if self.count is not None:
            return f"{self.branch.value} count={self.count} threshold={self.threshold!r}"
        return f"{self.branch.value} alpha={self.alpha!r} n_prime={self.n_prime}"


def progression_length(alpha: Fraction, n_prime: int) -> int:
    """N'' of an increment: c alpha^e N' / max(1, ln N'), never below the configured floor."""
    scale = settings.length_constant * float(alpha) ** settings.length_exponent
    return max(settings.min_progression_length, floor(scale * n_prime / max(1.0, log(n_prime))))


def _validate(members: List[int], N: int, n_prime: int, q0: int):
    if not members:
        raise DomainError("A must be nonempty.")
    if members[0] < 1 or members[-1] > N:
        raise DomainError(f"A must lie in [1, {N}].")
    if not 1 <= n_prime <= N:
        raise DomainError(f"need 1 <= N' <= N, got N'={n_prime}, N={N}.")
    if q0 < 1:
        raise DomainError(f"Q0 must be at least 1, got {q0}.")


def _scan(
    members: List[int], N: int, length: int, q0: int, threads: Optional[int]
) -> Tuple[int, int, int]:
    """Best (hits, q, x0) over q <= Q0 and every x0 with x0 + q²·[length] inside [1, N]."""

    def best_for(q: int) -> Tuple[int, int, int]:
        step = q * q
        hits, x0 = best_translate(members, step, length, 1 - step, N - step * length)
        return hits, q, x0

    best = (0, 0, 0)
    for candidate in parallel_map(best_for, range(1, q0 + 1), threads=threads):
        if candidate[0] > best[0]:
            best = candidate
    return best


def increment_search(
    members: Iterable[int],
    N: int,
    n_prime: int,
    q0: int,
    prefer_increment: bool = False,
    threads: Optional[int] = None,
) -> IncrementOutcome:
    """Decides the trichotomy for A in [1, N] with further integer N'.

    Args:
        members (Iterable[int]): The set A.
        N (int): Ambient interval size.
        n_prime (int): The further integer N'.
        q0 (int): Largest q whose square is tried as a common difference.
        prefer_increment (bool): Report an available increment before the many-solutions test.
        threads (int): Workers of the q scan.

    Returns:
        IncrementOutcome: the first branch that holds, or ``no-branch`` when none does.
    """
    members = sorted(set(members))
    _validate(members, N, n_prime, q0)
    alpha = Fraction(len(members), N)

    if n_prime >= alpha**settings.threshold_exponent * N:
        logger.debug(f"N'={n_prime} >= alpha^{settings.threshold_exponent} N for alpha={alpha}")
        return IncrementOutcome(
            branch=Branch.FURTHER_TOO_LARGE, n=N, n_prime=n_prime, alpha=float(alpha)
        )

    def many() -> Optional[IncrementOutcome]:
        count = trilinear_count(members, 1, isqrt(n_prime))
        threshold = float(alpha * alpha * N) * sqrt(n_prime) / 2
        if count >= threshold:
            return IncrementOutcome(
                branch=Branch.MANY_SOLUTIONS,
                n=N,
                n_prime=n_prime,
                alpha=float(alpha),
                count=count,
                threshold=threshold,
            )
        return None

    def increment() -> Optional[IncrementOutcome]:
        target = alpha + alpha**settings.increment_exponent
        if target >= 1:
            return None
        length = progression_length(alpha, n_prime)
        hits, q, x0 = _scan(members, N, length, q0, threads)
        if not q or Fraction(hits, length) <= target:
            return None
        scale = settings.length_constant * float(alpha) ** 2
        arc_q = max(q, floor(scale * n_prime / max(1.0, log(n_prime))))
        energy = major_arc_energy(
            BalancedIndicator(members, N), q, arc_q, power_of_two_at_least(2 * N)
        )
        return IncrementOutcome(
            branch=Branch.INCREMENT,
            n=N,
            n_prime=n_prime,
            alpha=float(alpha),
            q=q,
            length=length,
            offset=x0,
            hits=hits,
            new_density=hits / length,
            arc_energy=energy,
        )

    tests = (increment, many) if prefer_increment else (many, increment)
    for test in tests:
        outcome = test()
        if outcome is not None:
            logger.debug(f"|A|={len(members)} N={N} N'={n_prime}: {outcome.branch.value}")
            return outcome

    logger.warning(f"no branch holds for |A|={len(members)}, N={N}, N'={n_prime}, Q0={q0}")
    return IncrementOutcome(branch=Branch.NO_BRANCH, n=N, n_prime=n_prime, alpha=float(alpha))


class IncrementStage(BaseModel):
    model_config = ConfigDict(frozen=True)

    i: int
    d: int
    N: int
    x: int
    alpha: float
    hits: int
    n_prime: int
    branch: Optional[Branch] = None

    def to_text(self) -> str:
        branch = self.branch.value if self.branch else "-"
        fields = [self.i, self.d, self.N, self.x, repr(self.alpha), self.hits, self.n_prime, branch]
        return " ".join(str(field) for field in fields)


class IncrementIteration(BaseModel):
    """Final window x + r²·[L] of the increment iteration and its stages."""

    model_config = ConfigDict(frozen=True)

    r: int
    L: int
    L_prime: int
    x: int
    members: List[int]
    stages: List[IncrementStage]
    reason: str

    def to_text(self) -> str:
        lines = [stage.to_text() for stage in self.stages]
        lines.append(f"end {self.r} {self.L} {self.L_prime} {len(self.members)} {self.reason}")
        return "\n".join(lines)


def further_integer(alpha: Fraction, N: int) -> int:
    """Largest N' keeping N' < alpha^t N, at least 1."""
    return max(1, ceil(alpha**settings.threshold_exponent * N) - 1)


def arc_cutoff(alpha: Fraction) -> int:
    """Q0 = (c alpha)^-2, capped by ``max_q0``."""
    return min(settings.max_q0, ceil(1 / (settings.length_constant * float(alpha)) ** 2))


def density_increment_iterate(
    members: Iterable[int], N: int, threads: Optional[int] = None
) -> IncrementIteration:
    """Climbs denser and denser windows x_i + d_i²·[N_i] of A until many solutions appear.

    Args:
        members (Iterable[int]): The set A, inside [1, N].
        N (int): Ambient interval size.
        threads (int): Workers of each q scan.

    Returns:
        IncrementIteration: r = d of the last stage, L = N of the last stage, L' its further
        integer, A' = A on the window, the stage records and the terminal reason.
    """
    members = sorted(set(members))
    if not members:
        raise DomainError("A must be nonempty.")
    if members[0] < 1 or members[-1] > N:
        raise DomainError(f"A must lie in [1, {N}].")
    values = np.asarray(members, dtype=np.int64)

    d, size, x = 1, N, 0
    alpha0 = Fraction(len(members), N)
    max_stages = ceil(1 / alpha0**settings.increment_exponent) + 1
    stages: List[IncrementStage] = []
    reason = "stage-limit"

    def window_of(i: int):
        window = x + d * d * np.arange(1, size + 1, dtype=np.int64)
        rescaled = (np.flatnonzero(np.isin(window, values)) + 1).tolist()
        alpha = Fraction(len(rescaled), size)
        n_prime = further_integer(alpha, size)
        record = dict(
            i=i, d=d, N=size, x=x, alpha=float(alpha), hits=len(rescaled), n_prime=n_prime
        )
        return rescaled, alpha, n_prime, record

    # the else branch records the final window
    for i in range(max_stages - 1):
        rescaled, alpha, n_prime, record = window_of(i)
        if alpha == 1 and i > 0:
            stages.append(IncrementStage(**record))
            reason = "saturated"
            break
        if size < 4:
            stages.append(IncrementStage(**record))
            reason = "degenerate"
            break

        outcome = increment_search(
            rescaled, size, n_prime, arc_cutoff(alpha), prefer_increment=True, threads=threads
        )
        stages.append(IncrementStage(**record, branch=outcome.branch))
        logger.debug(f"stage {i}: d={d} N={size} x={x} alpha={alpha} {outcome.branch.value}")
        if outcome.branch != Branch.INCREMENT:
            reason = outcome.branch.value
            break

        d *= outcome.q
        size = outcome.length
        step = d * d
        _, x = best_translate(members, step, size, 1 - step * size, N - step)
    else:
        stages.append(IncrementStage(**window_of(max_stages - 1)[3]))

    last = stages[-1]
    window = last.x + last.d**2 * np.arange(1, last.N + 1, dtype=np.int64)
    subset = [int(v) for v in window[np.isin(window, values)]]
    logger.info(f"increment iteration ended after {len(stages)} stage(s): {reason}")
    return IncrementIteration(
        r=last.d,
        L=last.N,
        L_prime=last.n_prime,
        x=last.x,
        members=subset,
        stages=stages,
        reason=reason,
    )
