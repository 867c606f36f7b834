import logging
from math import isqrt
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from core.colouring import Colouring
from core.solutions import count_solutions
from utils import parallel_map

logger = logging.getLogger(__name__)


class ClassCounts(BaseModel):
    """Monochromatic solution counts per colour class."""

    model_config = ConfigDict(frozen=True)

    per_class: List[int]
    cross: int
    total: int

    def to_text(self) -> str:
        lines = [f"colour {colour} {count}" for colour, count in enumerate(self.per_class)]
        lines.append(f"cross {self.cross}")
        lines.append(f"total {self.total}")
        return "\n".join(lines)


def _count_chunk(colours: np.ndarray, k: int, zs: range) -> np.ndarray:
    n = len(colours) - 1
    counts = np.zeros(k, dtype=np.int64)
    for z in zs:
        square = z * z
        colour = colours[z]
        xs = np.arange(square + 1, n + 1)
        mono = (colours[xs] == colour) & (colours[xs - square] == colour)
        counts[colour] += int(np.count_nonzero(mono))
    return counts


def count_per_class(colouring: Colouring, threads: Optional[int] = None) -> ClassCounts:
    """Exact count of monochromatic solutions in each class; the rest are cross-class."""
    colours = colouring.as_array()
    n, k = colouring.n, colouring.k
    z_max = isqrt(n - 1) if n > 1 else 0

    chunk = max(1, z_max // 16 + 1)
    chunks = [range(lo, min(lo + chunk, z_max + 1)) for lo in range(1, z_max + 1, chunk)]
    partials = parallel_map(lambda zs: _count_chunk(colours, k, zs), chunks, threads=threads)
    per_class = np.sum(partials, axis=0) if partials else np.zeros(k, dtype=np.int64)

    total = count_solutions(n)
    per_class = [int(count) for count in per_class]
    logger.debug(f"per-class counts of {colouring}: {per_class} of {total}")
    return ClassCounts(per_class=per_class, cross=total - sum(per_class), total=total)
