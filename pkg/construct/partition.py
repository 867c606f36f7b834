import logging
from bisect import bisect_right
from typing import Iterable, List, Sequence, Tuple, Union

from core.colouring import Colouring, Run
from core.errors import CoverageError, DomainError

logger = logging.getLogger(__name__)

ClassSpec = Union[Iterable[int], Sequence[Tuple[int, int]]]


def _as_intervals(spec: ClassSpec) -> List[Tuple[int, int]]:
    """Normalizes a class given as integers or as (lo, hi) pairs into sorted merged intervals."""
    items = list(spec)
    if items and isinstance(items[0], (tuple, list)):
        intervals = sorted((int(lo), int(hi)) for lo, hi in items)
    else:
        intervals = [(value, value) for value in sorted(set(int(v) for v in items))]

    merged: List[Tuple[int, int]] = []
    for lo, hi in intervals:
        if hi < lo:
            continue
        if merged and lo <= merged[-1][1] + 1:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


def _contains(intervals: List[Tuple[int, int]], starts: List[int], x: int) -> bool:
    index = bisect_right(starts, x) - 1
    return index >= 0 and intervals[index][1] >= x


def cover_to_partition(classes: Sequence[ClassSpec], n: int) -> Colouring:
    """Turns a cover of [1, n] into a partition: each point keeps its lowest-indexed class.

    Args:
        classes (Sequence): Each class is a set of integers or a list of (lo, hi) runs.
        n (int): Size of the covered interval.

    Returns:
        Colouring: Run-form colouring with ``len(classes)`` colours.
    """
    if n < 1:
        raise DomainError(f"n must be a natural number, got {n}.")
    if not classes:
        raise CoverageError("no classes given.", witness=1)

    intervals = [_as_intervals(spec) for spec in classes]
    starts = [[lo for lo, _ in spec] for spec in intervals]

    breakpoints = {1, n + 1}
    for spec in intervals:
        for lo, hi in spec:
            if 1 <= lo <= n:
                breakpoints.add(lo)
            if 1 <= hi + 1 <= n:
                breakpoints.add(hi + 1)
    breakpoints = sorted(breakpoints)

    runs: List[Run] = []
    for lo, next_lo in zip(breakpoints, breakpoints[1:]):
        owner = next(
            (
                colour
                for colour, spec in enumerate(intervals)
                if _contains(spec, starts[colour], lo)
            ),
            None,
        )
        if owner is None:
            raise CoverageError(f"point {lo} is not covered by any class.", witness=lo)
        if runs and runs[-1].colour == owner:
            runs[-1] = Run(runs[-1].lo, next_lo - 1, owner)
        else:
            runs.append(Run(lo, next_lo - 1, owner))

    logger.debug(f"partitioned {len(classes)} classes over [1, {n}] into {len(runs)} runs")
    return Colouring(n=n, k=len(classes), runs=runs)
