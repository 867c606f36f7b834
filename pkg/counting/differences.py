import logging
from fractions import Fraction
from math import ceil, isqrt
from typing import Iterable, List, Optional, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict

from core.errors import DomainError
from core.sets import bitmask

logger = logging.getLogger(__name__)


def _mask(values: Iterable[int]):
    values = sorted(set(int(v) for v in values))
    if not values:
        return 0, 0, 0
    return bitmask(values, offset=values[0]), values[0], values[-1] - values[0]


def square_differences(values: Iterable[int], r: int, length: int) -> List[int]:
    """The x in {r, 2r, ..., length*r} with x² in A - A."""
    if r < 1 or length < 1:
        raise DomainError(f"r and L must be at least 1, got r={r}, L={length}.")
    mask, _, span = _mask(values)
    hits = []
    for multiple in range(1, length + 1):
        x = multiple * r
        square = x * x
        if square > span:
            break
        if mask & (mask >> square):
            hits.append(x)
    return hits


def sqdiff_count(values: Iterable[int], r: int, length: int) -> int:
    """#{x in r·[L] : x² in A - A}, with A - A the full difference set (0 included)."""
    return len(square_differences(values, r, length))


def trilinear_count(values: Iterable[int], r: int, z_count: int) -> int:
    """#{(x, y, z) : x, y in A, z in {r, 2r, ..., Z r}, x - y = z²}."""
    if r < 1 or z_count < 1:
        raise DomainError(f"r and Z must be at least 1, got r={r}, Z={z_count}.")
    mask, _, span = _mask(values)
    total = 0
    for multiple in range(1, z_count + 1):
        square = (multiple * r) ** 2
        if square > span:
            break
        total += (mask & (mask >> square)).bit_count()
    return total


class CorollaryWitness(BaseModel):
    model_config = ConfigDict(frozen=True)

    r: int
    L: int
    count: int
    alpha: float
    target: float


def corollary_witness(values: Iterable[int], N: int, r_max: int) -> Optional[CorollaryWitness]:
    """Least r <= r_max with sqdiff_count(A, r, ⌈N^(1/4)⌉) >= α L / 2, if any.

    The guarantee is asymptotic, so a missing witness is data, not a failure.
    """
    values = sorted(set(values))
    if N < 1 or not values:
        raise DomainError("A must be nonempty and N a natural number.")
    alpha = Fraction(len(values), N)
    length = max(1, ceil(N**0.25))
    while length**4 < N:
        length += 1
    while length > 1 and (length - 1) ** 4 >= N:
        length -= 1
    target = alpha * length / 2
    for r in range(1, r_max + 1):
        count = sqdiff_count(values, r, length)
        if count >= target:
            logger.debug(f"corollary witness r={r}, L={length}: {count} >= {float(target):.3f}")
            return CorollaryWitness(
                r=r, L=length, count=count, alpha=float(alpha), target=float(target)
            )
    return None


def squares_up_to(limit: int) -> List[int]:
    return [z * z for z in range(1, isqrt(max(limit, 0)) + 1)]


def corollary_report(corpus: Iterable[Tuple[str, int, Iterable[int]]], r_max: int) -> pd.DataFrame:
    """One (family, N, alpha, r, L, count, target) row per set; ``r`` is empty when none works."""
    rows = []
    for family, N, values in corpus:
        values = sorted(set(int(v) for v in values))
        if not values:
            continue
        witness = corollary_witness(values, N, r_max)
        row = {"family": family, "N": N, "size": len(values), "alpha": len(values) / N}
        if witness is None:
            row.update(r=None, L=None, count=None, target=None, found=False)
        else:
            row.update(
                r=witness.r,
                L=witness.L,
                count=witness.count,
                target=witness.target,
                found=True,
            )
        rows.append(row)
    report = pd.DataFrame(
        rows, columns=["family", "N", "size", "alpha", "r", "L", "count", "target", "found"]
    )
    if len(report):
        logger.info(f"square-difference witness found for {report['found'].mean():.1%} of sets")
    return report
