from typing import Iterable, Tuple

import numpy as np


def translate_counts(
    members: Iterable[int], step: int, length: int, x_lo: int, x_hi: int
) -> np.ndarray:
    """Hits of every translate of ``step * [length]`` against ``members``.

    Entry j is #{t in [1, length] : x_lo + j + step*t in members} for x_lo + j <= x_hi.
    """
    if x_hi < x_lo or length < 1 or step < 1:
        return np.zeros(0, dtype=np.int64)

    base = x_lo + step
    size = (x_hi - x_lo) + step * (length - 1) + 1
    values = np.fromiter(members, dtype=np.int64)
    values = values[(values >= base) & (values < base + size)] - base

    rows = -(-size // step)
    indicator = np.zeros(rows * step, dtype=np.int64)
    indicator[values] = 1

    # column ρ of the reshaped grid is the progression ρ, ρ + step, ρ + 2 step, ...
    cumulative = np.zeros((rows + 1, step), dtype=np.int64)
    np.cumsum(indicator.reshape(rows, step), axis=0, out=cumulative[1:])
    windows = cumulative[length:] - cumulative[:-length]
    return windows.reshape(-1)[: x_hi - x_lo + 1]


def best_translate(
    members: Iterable[int], step: int, length: int, x_lo: int, x_hi: int
) -> Tuple[int, int]:
    """(hits, x) maximizing hits over x in [x_lo, x_hi]; the least x wins ties."""
    counts = translate_counts(members, step, length, x_lo, x_hi)
    if counts.size == 0:
        return 0, x_lo
    index = int(np.argmax(counts))
    return int(counts[index]), x_lo + index
