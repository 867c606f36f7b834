"""Empirical replay of the colour-class elimination argument.

Starting from J = {} and S = Z, every stage rescales S onto d²·[N], climbs the increment
iteration to a window with many solutions, reads off the square differences u² it forces and
adds the colour class C that contains the most of the corresponding z = d·u. Offsets x_C keep
S = intersection over C in J of (x_C + C) aligned with the next window.
"""
import logging
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from analytic.increment import density_increment_iterate
from core.colouring import Colouring
from core.errors import PreconditionError
from core.verify import verify_colouring
from counting.differences import square_differences
from counting.progressions import best_translate

logger = logging.getLogger(__name__)


class TraceStage(BaseModel):
    model_config = ConfigDict(frozen=True)

    i: int
    J: List[int]
    d: int
    N: int
    x: int
    alpha: float
    alpha_exact: str
    r: int
    L: int
    alpha_floor: float
    floor_met: bool

    def to_text(self) -> str:
        return f"{self.i} {len(self.J)} {self.d} {self.N} {self.x} {self.alpha!r}"


class IterationTrace(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    n: int
    stages: List[TraceStage]
    reason: str

    def to_text(self) -> str:
        return "\n".join(stage.to_text() for stage in self.stages)


class _Window:
    """S as the intersection of shifted colour classes, read off the colour array."""

    def __init__(self, colours: np.ndarray):
        self.colours = colours
        self.n = len(colours) - 1
        self.offsets: Dict[int, int] = {}

    def contains(self, points: np.ndarray) -> np.ndarray:
        inside = np.ones(len(points), dtype=bool)
        for colour, offset in self.offsets.items():
            shifted = points - offset
            valid = (shifted >= 1) & (shifted <= self.n)
            hit = np.zeros(len(points), dtype=bool)
            hit[valid] = self.colours[shifted[valid]] == colour
            inside &= hit
        return inside

    def members(self) -> np.ndarray:
        """S explicitly; only defined once J is nonempty."""
        colour, offset = next(iter(self.offsets.items()))
        candidates = np.flatnonzero(self.colours == colour).astype(np.int64) + offset
        return candidates[self.contains(candidates)]


def _best_shift(targets: np.ndarray, window: _Window) -> Tuple[int, int]:
    """(x, count) maximizing #{w in T : w - x in S}; the least x wins ties."""
    if not window.offsets:
        return 0, len(targets)
    differences = np.subtract.outer(targets, window.members()).ravel()
    if differences.size == 0:
        return 0, 0
    shifts, counts = np.unique(differences, return_counts=True)
    index = int(np.argmax(counts))
    return int(shifts[index]), int(counts[index])


def iteration_trace(colouring: Colouring, threads: Optional[int] = None) -> IterationTrace:
    """Replays the elimination loop on a colouring without monochromatic solutions.

    Args:
        colouring (Colouring): A clean colouring of [1, n] with k colours.
        threads (int): Workers of the increment scans.

    Returns:
        IterationTrace: one stage per selected colour class and the terminal reason.
    """
    verdict = verify_colouring(colouring)
    if not verdict.clean:
        raise PreconditionError(f"colouring is not clean: {verdict.to_text()}")

    n, k = colouring.n, colouring.k
    colours = colouring.as_array()
    window = _Window(colours)
    chosen: List[int] = []
    d, size = 1, n
    stages: List[TraceStage] = []
    reason = "all-classes"

    while len(chosen) < k:
        points = d * d * np.arange(1, size + 1, dtype=np.int64)
        rescaled = (np.flatnonzero(window.contains(points)) + 1).tolist()
        if not rescaled:
            reason = "empty"
            break
        alpha = Fraction(len(rescaled), size)
        if size < 4:
            reason = "degenerate"
            break

        iteration = density_increment_iterate(rescaled, size, threads=threads)
        r, length = iteration.r, isqrt(iteration.L_prime)
        witnesses = square_differences(rescaled, r, length)
        if not witnesses or len(witnesses) < alpha * length / 2:
            reason = "no-square-differences"
            break

        zs = np.asarray([d * u for u in witnesses if d * u <= n], dtype=np.int64)
        coverage = np.bincount(colours[zs], minlength=k) if zs.size else np.zeros(k, dtype=int)
        coverage[chosen] = -1
        colour = int(np.argmax(coverage))
        if coverage[colour] <= 0:
            reason = "no-class"
            break

        d_next = d * r
        size_next = length // (r * d_next)
        if size_next < 1:
            reason = "degenerate"
            break
        step = d_next * d_next
        members = (np.flatnonzero(colours == colour)).tolist()
        _, anchor = best_translate(members, step, size_next, 1 - step * size_next, n - step)
        grid = step * np.arange(1, size_next + 1, dtype=np.int64)
        shifted = anchor + grid
        valid = (shifted >= 1) & (shifted <= n)
        targets = grid[valid][colours[shifted[valid]] == colour]

        shift, count = _best_shift(targets, window)
        for old in window.offsets:
            window.offsets[old] += shift
        window.offsets[colour] = -anchor
        chosen.append(colour)

        alpha_floor = alpha * alpha / (4 * k)
        new_alpha = Fraction(count, size_next)
        d, size = d_next, size_next
        stages.append(
            TraceStage(
                i=len(stages) + 1,
                J=sorted(chosen),
                d=d,
                N=size,
                x=shift,
                alpha=float(new_alpha),
                alpha_exact=str(new_alpha),
                r=r,
                L=length,
                alpha_floor=float(alpha_floor),
                floor_met=new_alpha >= alpha_floor,
            )
        )
        if new_alpha < alpha_floor:
            logger.warning(f"stage {len(stages)}: alpha={new_alpha} below floor {alpha_floor}")
        logger.debug(f"stage {len(stages)}: J={sorted(chosen)} d={d} N={size} x={shift}")

    logger.info(f"iteration trace of k={k}, n={n}: {len(stages)} stage(s), {reason}")
    return IterationTrace(k=k, n=n, stages=stages, reason=reason)
