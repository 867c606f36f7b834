import logging
from math import isqrt
from typing import List, NamedTuple

from configs import settings
from core.errors import CapacityError

logger = logging.getLogger(__name__)


class SolutionTriple(NamedTuple):
    """A solution of x - y = z² with x, y, z in [1, n]."""

    x: int
    y: int
    z: int


def ceil_sqrt(m: int) -> int:
    """Smallest natural z with z² >= m (0 for m <= 0)."""
    if m <= 0:
        return 0
    root = isqrt(m)
    return root if root * root == m else root + 1


def is_solution(x: int, y: int, z: int, n: int) -> bool:
    for v in (x, y, z):
        if v < 1 or v > n:
            return False
    return x - y == z * z


def count_solutions(n: int) -> int:
    """Closed form Σ_{z² <= n-1} (n - z²); exact for arbitrary-precision n."""
    if n < 2:
        return 0
    m = isqrt(n - 1)
    # Σ_{z=1}^{m} z² = m(m+1)(2m+1)/6
    return m * n - m * (m + 1) * (2 * m + 1) // 6


def enumerate_solutions(n: int) -> List[SolutionTriple]:
    """All solution triples in [1, n], sorted lexicographically."""
    if n > settings.explicit_threshold:
        raise CapacityError(
            f"n={n} exceeds the explicit threshold {settings.explicit_threshold}."
        )
    triples = []
    for x in range(2, n + 1):
        # y ascending means z descending
        for z in range(isqrt(x - 1), 0, -1):
            triples.append(SolutionTriple(x, x - z * z, z))
    logger.debug(f"enumerated {len(triples)} solutions in [1, {n}]")
    return triples
