import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

import numpy as np
import seaborn as sns
from matplotlib import pyplot as plt

from configs import settings

T = TypeVar("T")
R = TypeVar("R")


def resolve_threads(threads: Optional[int] = None) -> int:
    threads = threads if threads is not None else settings.threads
    return max(1, threads or os.cpu_count() or 1)


def parallel_map(
    fn: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None
) -> List[R]:
    """``list(map(fn, items))`` on a thread pool; results keep the order of ``items``."""
    items = list(items)
    workers = min(resolve_threads(threads), max(1, len(items)))
    if workers == 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def plot_weyl_magnitudes(
    magnitudes: np.ndarray, trivial_bound: float, title: str, figsize=(10, 4), color="C0"
):
    fig, ax = plt.subplots(figsize=figsize)
    grid = np.arange(len(magnitudes)) / len(magnitudes)
    sns.lineplot(x=grid, y=magnitudes, ax=ax, color=color, linewidth=0.6)
    ax.axhline(trivial_bound, color="grey", linestyle="--", linewidth=0.8)
    ax.set_xlabel("theta")
    ax.set_ylabel("|T(theta)|")
    ax.set_title(title)
    plt.close(fig)
    return fig
