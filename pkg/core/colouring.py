from __future__ import annotations

import sys
from bisect import bisect_right
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from configs import settings
from core.errors import CapacityError, InvariantError


class Run(NamedTuple):
    """A maximal-or-not block [lo, hi] carrying one colour."""

    lo: int
    hi: int
    colour: int


def _allow_long_integers():
    # endpoints such as 2^(2^15) have more digits than the default str() limit
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


class Colouring:
    """A partition of [1, n] into k colour classes.

    Stored either explicitly (one colour per point) or as sorted interval runs. The run form
    accepts arbitrary-precision endpoints; the explicit form is refused above
    ``settings.explicit_threshold`` points.
    """

    def __init__(
        self,
        n: int,
        k: int,
        assignment: Optional[Sequence[int]] = None,
        runs: Optional[Sequence[Run]] = None,
    ):
        if (assignment is None) == (runs is None):
            raise InvariantError("exactly one of assignment and runs must be provided.")

        self.n = n
        self.k = k
        self.assignment: Optional[Tuple[int, ...]] = None
        self.runs: Optional[Tuple[Run, ...]] = None

        if assignment is not None:
            if n > settings.explicit_threshold:
                raise CapacityError(
                    f"explicit colouring of n={n} exceeds the threshold "
                    f"{settings.explicit_threshold}."
                )
            self.assignment = tuple(int(c) for c in assignment)
        else:
            self.runs = tuple(Run(int(lo), int(hi), int(c)) for lo, hi, c in runs)
            self._los = [run.lo for run in self.runs]

        self.validate()

    @classmethod
    def explicit(cls, colours: Sequence[int], k: Optional[int] = None) -> Colouring:
        """``colours[i]`` is the colour of the point i + 1."""
        colours = list(colours)
        if k is None:
            k = max(colours) + 1 if colours else 1
        return cls(n=len(colours), k=k, assignment=colours)

    @classmethod
    def from_runs(
        cls, runs: Iterable[Sequence[int]], k: Optional[int] = None, n: Optional[int] = None
    ) -> Colouring:
        runs = [Run(*run) for run in runs]
        if not runs:
            raise InvariantError("a colouring needs at least one run.")
        if k is None:
            k = max(run.colour for run in runs) + 1
        if n is None:
            n = runs[-1].hi
        return cls(n=n, k=k, runs=runs)

    @classmethod
    def monochromatic(cls, n: int) -> Colouring:
        return cls(n=n, k=1, runs=[Run(1, n, 0)])

    def validate(self):
        if self.n < 1:
            raise InvariantError(f"n must be a natural number, got {self.n}.")
        if self.k < 1:
            raise InvariantError(f"k must be at least 1, got {self.k}.")

        if self.assignment is not None:
            if len(self.assignment) != self.n:
                raise InvariantError(
                    f"explicit colouring has {len(self.assignment)} entries for n={self.n}."
                )
            for x, colour in enumerate(self.assignment, start=1):
                if not 0 <= colour < self.k:
                    raise InvariantError(f"point {x} has colour {colour} outside [0, {self.k}).")
            return

        expected = 1
        for run in self.runs:
            if run.lo != expected:
                raise InvariantError(f"run {tuple(run)} should start at {expected}.")
            if run.hi < run.lo:
                raise InvariantError(f"run {tuple(run)} is empty.")
            if not 0 <= run.colour < self.k:
                raise InvariantError(f"run {tuple(run)} has colour outside [0, {self.k}).")
            expected = run.hi + 1
        if expected != self.n + 1:
            raise InvariantError(f"runs end at {expected - 1}, expected n={self.n}.")

    @property
    def is_explicit(self) -> bool:
        return self.assignment is not None

    def colour_of(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise InvariantError(f"point {x} lies outside [1, {self.n}].")
        if self.assignment is not None:
            return self.assignment[x - 1]
        return self.runs[bisect_right(self._los, x) - 1].colour

    def to_runs(self) -> Colouring:
        if self.runs is not None:
            return self
        runs = []
        lo = 1
        for x in range(2, self.n + 2):
            if x == self.n + 1 or self.assignment[x - 1] != self.assignment[lo - 1]:
                runs.append(Run(lo, x - 1, self.assignment[lo - 1]))
                lo = x
        return Colouring(n=self.n, k=self.k, runs=runs)

    def to_explicit(self) -> Colouring:
        if self.assignment is not None:
            return self
        if self.n > settings.explicit_threshold:
            raise CapacityError(
                f"n={self.n} exceeds the explicit threshold {settings.explicit_threshold}."
            )
        colours = []
        for run in self.runs:
            colours.extend([run.colour] * (run.hi - run.lo + 1))
        return Colouring(n=self.n, k=self.k, assignment=colours)

    def canonical_runs(self) -> Tuple[Run, ...]:
        """Runs with equal-coloured neighbours merged."""
        merged: List[Run] = []
        for run in self.to_runs().runs:
            if merged and merged[-1].colour == run.colour:
                merged[-1] = Run(merged[-1].lo, run.hi, run.colour)
            else:
                merged.append(run)
        return tuple(merged)

    def class_runs(self, colour: int) -> List[Tuple[int, int]]:
        return [(run.lo, run.hi) for run in self.canonical_runs() if run.colour == colour]

    def as_array(self) -> np.ndarray:
        """Colours as an int array indexed by point; index 0 holds -1."""
        explicit = self.to_explicit()
        array = np.empty(self.n + 1, dtype=np.int64)
        array[0] = -1
        array[1:] = explicit.assignment
        return array

    def classes(self) -> List[np.ndarray]:
        """Sorted members of each colour class (explicit range only)."""
        array = self.as_array()
        return [np.flatnonzero(array == colour) for colour in range(self.k)]

    def to_text(self) -> str:
        _allow_long_integers()
        lines = [f"{self.n} {self.k}"]
        if self.assignment is not None:
            lines.append("E")
            lines.append(" ".join(str(c) for c in self.assignment))
        else:
            lines.append("R")
            lines.extend(f"{run.lo} {run.hi} {run.colour}" for run in self.runs)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Colouring:
        _allow_long_integers()
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        if len(lines) < 2:
            raise InvariantError("colouring text needs a header line and a form line.")
        try:
            n, k = (int(token) for token in lines[0].split())
        except ValueError:
            raise InvariantError(f"malformed header line {lines[0]!r}.")

        form = lines[1]
        if form == "E":
            tokens = " ".join(lines[2:]).split()
            if n > settings.explicit_threshold:
                raise CapacityError(
                    f"explicit colouring of n={n} exceeds the threshold "
                    f"{settings.explicit_threshold}."
                )
            return cls(n=n, k=k, assignment=[int(token) for token in tokens])
        if form == "R":
            runs = []
            for line in lines[2:]:
                parts = line.split()
                if len(parts) != 3:
                    raise InvariantError(f"malformed run line {line!r}.")
                runs.append(Run(*(int(part) for part in parts)))
            return cls(n=n, k=k, runs=runs)
        raise InvariantError(f"unknown colouring form {form!r}; expected 'E' or 'R'.")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Colouring):
            return NotImplemented
        return (
            self.n == other.n
            and self.k == other.k
            and self.canonical_runs() == other.canonical_runs()
        )

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.canonical_runs()))

    def __repr__(self) -> str:
        form = "explicit" if self.is_explicit else f"{len(self.runs)} runs"
        return f"Colouring(n={self.n}, k={self.k}, {form})"
