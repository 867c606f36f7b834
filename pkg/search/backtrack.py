import logging
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from configs import settings
from construct.lower_bound import construct_lower_bound
from core.budget import Budget, BudgetMeter
from core.colouring import Colouring
from core.errors import CapacityError, DomainError, InvariantError
from core.verify import verify_colouring

logger = logging.getLogger(__name__)


class Status(str, Enum):
    COLOURABLE = "colourable"
    NOT_COLOURABLE = "not-colourable"
    UNKNOWN = "unknown"


class SearchOutcome(BaseModel):
    """Verdict of a feasibility query for (k, n)."""

    model_config = ConfigDict(frozen=True)

    status: Status
    k: int
    n: int
    witness: Optional[Tuple[int, ...]] = None  # colour of 1..n when colourable
    nodes_explored: int = 0
    seconds: float = 0.0

    @property
    def colouring(self) -> Optional[Colouring]:
        if self.witness is None:
            return None
        return Colouring(n=self.n, k=self.k, assignment=self.witness)

    def to_text(self) -> str:
        return f"{self.status.value} k={self.k} n={self.n} nodes={self.nodes_explored}"


class SValue(BaseModel):
    """Result of ``compute_S``: the exact value or a certified lower bound."""

    model_config = ConfigDict(frozen=True)

    k: int
    value: int
    exact: bool
    witness: Optional[Tuple[int, ...]] = None
    nodes_explored: int = 0
    seconds: float = 0.0

    def to_text(self) -> str:
        label = "value" if self.exact else "lower_bound"
        return f"{label} {self.value}"


class _Backtracker:
    """Colours 1, 2, ..., n in order with per-colour bitsets.

    ``members[c]`` has bit x set when x has colour c; ``forbidden[c]`` has bit x set when
    colouring x with c would close a monochromatic triple with already coloured points. The
    largest element of a triple is always x, so every constraint is known by the time x is
    reached.
    """

    def __init__(self, k: int, n: int, meter: BudgetMeter, symmetry_breaking: bool):
        self.k = k
        self.n = n
        self.meter = meter
        self.symmetry_breaking = symmetry_breaking
        self.full = (1 << (n + 1)) - 1

    def _forbid(self, point: int, colour: int, members: List[int], small: List[int]) -> int:
        """New forbidden bits for ``colour`` after ``point`` joins it."""
        n = self.n
        bits = (members[colour] << (point * point)) & self.full  # point as z
        for z in small:  # point as y
            target = point + z * z
            if target > n:
                break
            bits |= 1 << target
        return bits

    def run(self) -> Tuple[Optional[List[int]], bool]:
        """Returns (colours of 1..n or None, exhausted)."""
        k, n = self.k, self.n
        colours = [-1] * (n + 1)
        members = [0] * k
        forbidden = [0] * k
        small: List[List[int]] = [[] for _ in range(k)]
        highest = [-1] * (n + 1)  # highest colour used on 1..p
        saved: List[Optional[Tuple[List[int], List[int]]]] = [None] * (n + 1)

        point = 1
        while True:
            if point > n:
                return colours[1:], False

            limit = k
            if self.symmetry_breaking:
                limit = min(k, highest[point - 1] + 2)

            colour = colours[point] + 1
            placed = False
            while colour < limit:
                if not (forbidden[colour] >> point) & 1:
                    if not self.meter.spend():
                        return None, True
                    saved[point] = (members[:], forbidden[:])
                    members[colour] |= 1 << point
                    small[colour].append(point)
                    forbidden[colour] |= self._forbid(point, colour, members, small[colour])

                    wiped = self.full & ~((1 << (point + 1)) - 1)
                    for mask in forbidden:
                        wiped &= mask
                    if not wiped:
                        colours[point] = colour
                        highest[point] = max(highest[point - 1], colour)
                        placed = True
                        break

                    members, forbidden = saved[point]
                    small[colour].pop()
                colour += 1

            if placed:
                point += 1
                continue

            colours[point] = -1
            point -= 1
            if point == 0:
                return None, False
            previous = colours[point]
            members, forbidden = saved[point]
            small[previous].pop()
            logger.debug(f"backtrack to point {point} (was colour {previous})")


def _check_arguments(k: int, n: int):
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}.")
    if n < 1:
        raise DomainError(f"n must be a natural number, got {n}.")
    if n > settings.explicit_threshold:
        raise CapacityError(f"n={n} exceeds the explicit threshold {settings.explicit_threshold}.")


def _feasible(
    k: int, n: int, meter: BudgetMeter, symmetry_breaking: bool
) -> Tuple[Status, Optional[Tuple[int, ...]]]:
    if meter.exhausted:
        return Status.UNKNOWN, None
    colours, exhausted = _Backtracker(k, n, meter, symmetry_breaking).run()
    if colours is not None:
        witness = Colouring(n=n, k=k, assignment=colours)
        verdict = verify_colouring(witness)
        if not verdict.clean:
            raise InvariantError(f"backtracking produced a bad witness: {verdict.to_text()}")
        return Status.COLOURABLE, tuple(colours)
    if exhausted:
        return Status.UNKNOWN, None
    return Status.NOT_COLOURABLE, None


def feasible(
    k: int,
    n: int,
    budget: Optional[Budget] = None,
    symmetry_breaking: Optional[bool] = None,
) -> SearchOutcome:
    """Decides whether [1, n] has a k-colouring without monochromatic x - y = z².

    Args:
        k (int): Number of colours.
        n (int): Size of the interval.
        budget (Budget, optional): Node and time limits. Defaults to the configured budget.
        symmetry_breaking (bool, optional): Quotient by colour permutations.

    Returns:
        SearchOutcome: Colourable with a verified witness, NotColourable after an exhaustive
        search, or Unknown when the budget ran out.
    """
    _check_arguments(k, n)
    if symmetry_breaking is None:
        symmetry_breaking = settings.symmetry_breaking
    meter = BudgetMeter(budget or Budget.default())
    status, witness = _feasible(k, n, meter, symmetry_breaking)
    logger.info(f"feasible(k={k}, n={n}): {status.value} after {meter.nodes} nodes")
    return SearchOutcome(
        status=status,
        k=k,
        n=n,
        witness=witness,
        nodes_explored=meter.nodes,
        seconds=meter.elapsed,
    )


def compute_S(
    k: int,
    budget: Optional[Budget] = None,
    symmetry_breaking: Optional[bool] = None,
) -> SValue:
    """Ascends n until [1, n] stops being k-colourable.

    The ascent starts at 2^(2^(k-1)) for k >= 2, where the lower-bound construction already
    certifies colourability, and at 1 for k = 1. The budget is shared by all feasibility calls.
    """
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}.")
    if symmetry_breaking is None:
        symmetry_breaking = settings.symmetry_breaking
    meter = BudgetMeter(budget or Budget.default())

    last, witness = 0, None
    n = 1
    if 2 <= k <= settings.max_construct_k and (1 << (1 << (k - 1))) <= settings.search_max_n:
        start = construct_lower_bound(k)
        last, witness = start.n, start.to_explicit().assignment
        n = last + 1

    while n <= settings.search_max_n:
        status, found = _feasible(k, n, meter, symmetry_breaking)
        logger.info(f"S({k}) at n={n}: {status.value} ({meter.nodes} nodes so far)")
        if status == Status.COLOURABLE:
            last, witness = n, found
            n += 1
            continue
        exact = status == Status.NOT_COLOURABLE
        return SValue(
            k=k,
            value=last,
            exact=exact,
            witness=witness,
            nodes_explored=meter.nodes,
            seconds=meter.elapsed,
        )

    logger.warning(f"S({k}) ascent reached search_max_n={settings.search_max_n}")
    return SValue(
        k=k,
        value=last,
        exact=False,
        witness=witness,
        nodes_explored=meter.nodes,
        seconds=meter.elapsed,
    )
