from typing import Iterable, List

from core.errors import InvariantError


def parse_set(text: str) -> List[int]:
    """Reads a set file: decimal integers, one per line, sorted ascending."""
    values = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            values.append(int(line))
        except ValueError:
            raise InvariantError(f"line {number} of the set file is not an integer: {line!r}.")
    if any(a >= b for a, b in zip(values, values[1:])):
        raise InvariantError("set files must be sorted ascending without repeats.")
    return values


def format_set(values: Iterable[int]) -> str:
    return "".join(f"{value}\n" for value in sorted(set(values)))


def bitmask(values: Iterable[int], offset: int = 0) -> int:
    """Python-int bitset with bit ``v - offset`` set for every v."""
    mask = 0
    for value in values:
        mask |= 1 << (value - offset)
    return mask
