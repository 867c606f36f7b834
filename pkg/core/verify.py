import logging
from bisect import bisect_right
from math import isqrt
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from core.colouring import Colouring
from core.solutions import SolutionTriple, ceil_sqrt

logger = logging.getLogger(__name__)


class Verdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    clean: bool
    witness: Optional[SolutionTriple] = None
    colour: Optional[int] = None

    def to_text(self) -> str:
        if self.clean:
            return "clean"
        x, y, z = self.witness
        return f"violation {x} {y} {z} colour {self.colour}"


class _ClassRuns:
    """Sorted runs of one colour class with member lookups by bisection."""

    def __init__(self, runs: List[Tuple[int, int]]):
        self.runs = runs
        self.los = [lo for lo, _ in runs]

    def next_member(self, v: int) -> Optional[int]:
        """Least member >= v."""
        index = bisect_right(self.los, v) - 1
        if index >= 0 and self.runs[index][1] >= v:
            return v
        if index + 1 < len(self.runs):
            return self.runs[index + 1][0]
        return None

    def prev_member(self, v: int) -> Optional[int]:
        """Greatest member <= v."""
        index = bisect_right(self.los, v) - 1
        if index < 0:
            return None
        return min(v, self.runs[index][1])


def _least_witness_for_runs(
    a: Tuple[int, int], b: Tuple[int, int], members: _ClassRuns
) -> Optional[SolutionTriple]:
    """Least (x, y, z) with x in run a, y in run b and z a member of the class."""
    a_lo, a_hi = a
    b_lo, b_hi = b
    d_hi = a_hi - b_lo
    if d_hi < 1:
        return None
    d_lo = max(1, a_lo - b_hi)
    z_lo, z_hi = ceil_sqrt(d_lo), isqrt(d_hi)
    z_first = members.next_member(z_lo)
    if z_first is None or z_first > z_hi:
        return None

    if b_lo + z_first * z_first >= a_lo:
        return SolutionTriple(b_lo + z_first * z_first, b_lo, z_first)

    # x = a_lo is reachable; the largest admissible z gives the least y
    z_last = members.prev_member(min(z_hi, isqrt(a_lo - b_lo)))
    return SolutionTriple(a_lo, a_lo - z_last * z_last, z_last)


def _verify_runs(colouring: Colouring) -> Verdict:
    best: Optional[Tuple[SolutionTriple, int]] = None
    for colour in range(colouring.k):
        runs = colouring.class_runs(colour)
        if not runs:
            continue
        members = _ClassRuns(runs)
        for a in runs:
            for b in runs:
                if b[0] > a[1]:
                    break
                witness = _least_witness_for_runs(a, b, members)
                if witness is not None and (best is None or witness < best[0]):
                    best = (witness, colour)
    if best is None:
        return Verdict(clean=True)
    return Verdict(clean=False, witness=best[0], colour=best[1])


def _verify_explicit(colouring: Colouring) -> Verdict:
    colours = colouring.as_array()
    n = colouring.n
    best: Optional[SolutionTriple] = None
    for z in range(1, isqrt(n - 1) + 1 if n > 1 else 1):
        square = z * z
        colour = colours[z]
        xs = np.arange(square + 1, n + 1)
        mono = (colours[xs] == colour) & (colours[xs - square] == colour)
        hits = np.flatnonzero(mono)
        if hits.size == 0:
            continue
        x = int(xs[hits[0]])
        candidate = SolutionTriple(x, x - square, z)
        if best is None or candidate < best:
            best = candidate
    if best is None:
        return Verdict(clean=True)
    return Verdict(clean=False, witness=best, colour=int(colours[best.x]))


def verify_colouring(colouring: Colouring) -> Verdict:
    """Searches ``colouring`` for a monochromatic solution of x - y = z².

    Explicit colourings are scanned one square at a time; run colourings are checked pairwise
    on runs, so [1, n] is never enumerated and n may be arbitrarily large.

    Args:
        colouring (Colouring): The colouring to check.

    Returns:
        Verdict: ``clean``, or the lexicographically least monochromatic triple and its colour.
    """
    colouring.validate()
    if colouring.is_explicit:
        verdict = _verify_explicit(colouring)
    else:
        verdict = _verify_runs(colouring)
    logger.debug(f"verified {colouring}: {verdict.to_text()}")
    return verdict
