from counting import classes
from counting import differences
from counting import extremal
from counting import progressions
from counting.classes import ClassCounts, count_per_class
from counting.differences import (
    CorollaryWitness,
    corollary_report,
    corollary_witness,
    square_differences,
    sqdiff_count,
    trilinear_count,
)
from counting.extremal import ExtremalResult, fs_extremal, is_square_difference_free
from counting.progressions import best_translate, translate_counts

__all__ = [
    "classes",
    "differences",
    "extremal",
    "progressions",
    "ClassCounts",
    "count_per_class",
    "CorollaryWitness",
    "corollary_report",
    "corollary_witness",
    "square_differences",
    "sqdiff_count",
    "trilinear_count",
    "ExtremalResult",
    "fs_extremal",
    "is_square_difference_free",
    "best_translate",
    "translate_counts",
]
