import logging
from typing import Tuple

from configs import settings
from core.colouring import Colouring, Run
from core.errors import CapacityError, DomainError

logger = logging.getLogger(__name__)


def construct_lower_bound(k: int) -> Colouring:
    """Builds the k-colouring of [1, 2^(2^(k-1))] with no monochromatic x - y = z².

    Classes are {1} and the blocks {2^(2^i), ..., 2^(2^(i+1))} for 0 <= i <= k - 2; the shared
    endpoint of two neighbouring blocks stays with the lower block.

    Args:
        k (int): Number of colours, at least 2.

    Returns:
        Colouring: Run-form colouring with k runs, run i + 1 coloured i + 1.
    """
    if k < 2:
        raise DomainError(f"the construction needs k >= 2, got k={k}.")
    if k > settings.max_construct_k:
        raise CapacityError(
            f"k={k} exceeds max_construct_k={settings.max_construct_k}; "
            f"2^(2^{k - 1}) is too large to represent."
        )

    runs = [Run(1, 1, 0)]
    for i in range(k - 1):
        lo = 1 << (1 << i)
        hi = 1 << (1 << (i + 1))
        if i > 0:
            lo += 1  # 2^(2^i) already belongs to colour i
        runs.append(Run(lo, hi, i + 1))

    colouring = Colouring(n=runs[-1].hi, k=k, runs=runs)
    logger.debug(f"constructed {colouring} for k={k}")
    return colouring


def run_gap_exponents(i: int) -> Tuple[int, int, int]:
    """Exponents certifying 2^(2^(i+1)) - 2^(2^i) < (2^(2^i))² without building the integers.

    Returns (top, bottom, square) with the block spanning [2^bottom, 2^top] and its least element
    squared equal to 2^square. The inequality holds iff top <= square, since 2^bottom > 0.
    """
    bottom = 1 << i
    top = 1 << (i + 1)
    square = 2 * bottom
    return top, bottom, square
