import logging
from math import isqrt
from typing import Iterable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from configs import settings
from core.budget import Budget, BudgetMeter
from core.errors import CapacityError, DomainError
from counting.differences import squares_up_to

logger = logging.getLogger(__name__)

METHODS = ("branch-and-bound", "dp")


class ExtremalResult(BaseModel):
    """Largest subset of [1, n] without two distinct elements a square apart."""

    model_config = ConfigDict(frozen=True)

    n: int
    size: int
    witness: List[int]
    optimal: bool
    method: str
    nodes: int = 0

    def to_text(self) -> str:
        label = "size" if self.optimal else "size_lower_bound"
        return f"{label} {self.size}\nwitness {' '.join(str(v) for v in self.witness)}"


def is_square_difference_free(values: Iterable[int]) -> bool:
    values = sorted(set(values))
    for i, high in enumerate(values):
        for low in values[:i]:
            difference = high - low
            if isqrt(difference) ** 2 == difference:
                return False
    return True


def neighbour_masks(n: int) -> List[int]:
    """Bit u of entry v is set when points v + 1 and u + 1 differ by a nonzero square."""
    squares = squares_up_to(n - 1)
    masks = []
    for v in range(n):
        mask = 0
        for square in squares:
            if v + square < n:
                mask |= 1 << (v + square)
            if v - square >= 0:
                mask |= 1 << (v - square)
        masks.append(mask)
    return masks


def _points(mask: int) -> List[int]:
    points = []
    while mask:
        low = mask & -mask
        points.append(low.bit_length())
        mask ^= low
    return points


class _Exhausted(Exception):
    pass


class _BranchAndBound:
    """Include/exclude search on the lowest candidate, pruned by a greedy clique cover."""

    def __init__(self, neighbours: List[int], meter: BudgetMeter):
        self.neighbours = neighbours
        self.meter = meter
        self.best_size = 0
        self.best_set = 0

    def _clique_cover(self, candidates: int) -> int:
        cliques = 0
        while candidates:
            vertex = (candidates & -candidates).bit_length() - 1
            clique = 1 << vertex
            pool = candidates & self.neighbours[vertex]
            while pool:
                other = (pool & -pool).bit_length() - 1
                clique |= 1 << other
                pool &= self.neighbours[other]
            candidates &= ~clique
            cliques += 1
        return cliques

    def search(self, chosen: int, size: int, candidates: int):
        if not self.meter.spend():
            raise _Exhausted
        if size > self.best_size:
            self.best_size, self.best_set = size, chosen
        if not candidates or size + self._clique_cover(candidates) <= self.best_size:
            return

        vertex = (candidates & -candidates).bit_length() - 1
        bit = 1 << vertex
        self.search(chosen | bit, size + 1, candidates & ~bit & ~self.neighbours[vertex])
        # an isolated candidate is always taken
        if candidates & self.neighbours[vertex]:
            self.search(chosen, size, candidates & ~bit)


def _branch_and_bound(n: int, meter: BudgetMeter) -> Tuple[int, int, bool]:
    solver = _BranchAndBound(neighbour_masks(n), meter)
    try:
        solver.search(0, 0, (1 << n) - 1)
        optimal = True
    except _Exhausted:
        optimal = False
    return solver.best_size, solver.best_set, optimal


def _independent_table(neighbours: List[int], bits: int) -> np.ndarray:
    """table[m] = largest independent subset of the low vertices in m."""
    table = np.zeros(1 << bits, dtype=np.int8)
    for high in range(bits):
        block = np.arange(1 << high, dtype=np.int64)
        lower = neighbours[high] & ((1 << high) - 1)
        table[(1 << high) + block] = np.maximum(table[block], 1 + table[block & ~lower])
    return table


def _reconstruct(table: np.ndarray, neighbours: List[int], mask: int) -> int:
    chosen = 0
    while mask:
        high = mask.bit_length() - 1
        rest = mask ^ (1 << high)
        if table[mask] == table[rest]:
            mask = rest
        else:
            chosen |= 1 << high
            mask = rest & ~neighbours[high]
    return chosen


def _dp(n: int, meter: BudgetMeter, dp_bits: int) -> Tuple[int, int, bool]:
    """Bitmask DP on the low vertices joined with every independent set of the high ones."""
    neighbours = neighbour_masks(n)
    bits = min(n, dp_bits)
    low_all = (1 << bits) - 1
    table = _independent_table(neighbours, bits)
    meter.spend(1 << bits)

    def free_low(high_set: int) -> int:
        blocked = 0
        for point in _points(high_set):
            blocked |= neighbours[point - 1]
        return low_all & ~blocked

    # the empty high set is always a valid fallback
    best_size, best_high = int(table[low_all]), 0
    optimal = True
    stack = [(0, 0, bits)]  # (chosen high vertices, count, next vertex to decide)
    while stack:
        chosen, count, vertex = stack.pop()
        if not meter.spend():
            optimal = False
            break
        if vertex == n:
            size = count + int(table[free_low(chosen)])
            if size > best_size:
                best_size, best_high = size, chosen
            continue
        stack.append((chosen, count, vertex + 1))
        if not chosen & neighbours[vertex]:
            stack.append((chosen | (1 << vertex), count + 1, vertex + 1))

    chosen = best_high | _reconstruct(table, neighbours, free_low(best_high))
    return best_size, chosen, optimal


def fs_extremal(
    n: int,
    budget: Optional[Budget] = None,
    method: str = "branch-and-bound",
    dp_bits: Optional[int] = None,
) -> ExtremalResult:
    """Largest B in [1, n] with no two distinct elements differing by a perfect square.

    Args:
        n (int): Size of the interval.
        budget (Budget): Node and time limits; exhaustion returns the best set found so far.
        method (str): ``"branch-and-bound"`` or ``"dp"``; both are exact.
        dp_bits (int): Number of low vertices tabulated by the DP method.

    Returns:
        ExtremalResult: size, one witness set and whether optimality was proved.
    """
    if n < 1:
        raise DomainError(f"n must be a natural number, got {n}.")
    if n > settings.extremal_exact_threshold:
        raise CapacityError(
            f"n={n} exceeds the exhaustive threshold {settings.extremal_exact_threshold}."
        )
    if method not in METHODS:
        raise DomainError(f"method must be one of {METHODS}, got {method!r}.")

    meter = BudgetMeter(budget or Budget.default())
    if method == "dp":
        size, chosen, optimal = _dp(n, meter, dp_bits or settings.extremal_dp_bits)
    else:
        size, chosen, optimal = _branch_and_bound(n, meter)

    witness = _points(chosen)
    logger.info(f"fs_extremal({n}) via {method}: {size} ({'optimal' if optimal else 'best found'})")
    return ExtremalResult(
        n=n, size=size, witness=witness, optimal=optimal, method=method, nodes=meter.nodes
    )
