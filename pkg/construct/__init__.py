from construct import lower_bound
from construct import partition
from construct.lower_bound import construct_lower_bound, run_gap_exponents
from construct.partition import cover_to_partition

__all__ = [
    "lower_bound",
    "partition",
    "construct_lower_bound",
    "run_gap_exponents",
    "cover_to_partition",
]
