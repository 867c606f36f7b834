import logging
from typing import Iterable, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from configs import settings
from core.budget import Budget, BudgetMeter
from core.colouring import Colouring
from core.errors import CapacityError, DomainError, InvariantError
from core.solutions import enumerate_solutions
from core.verify import verify_colouring
from search import dpll
from search.backtrack import SearchOutcome, Status

logger = logging.getLogger(__name__)

MAX_DIMACS_VARIABLE = 2**31 - 1


class CNF(BaseModel):
    model_config = ConfigDict(frozen=True)

    num_vars: int
    clauses: List[List[int]]

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines.extend(" ".join(str(literal) for literal in clause) + " 0" for clause in self.clauses)
        return "\n".join(lines) + "\n"


def variable(x: int, colour: int, k: int) -> int:
    """DIMACS index of "point x has colour c"."""
    return (x - 1) * k + colour + 1


def build_cnf(k: int, n: int, at_most_one: bool = False) -> CNF:
    """Clauses for a k-colouring of [1, n] with no monochromatic x - y = z².

    Args:
        k (int): Number of colours.
        n (int): Size of the interval.
        at_most_one (bool): Add pairwise at-most-one-colour clauses.

    Returns:
        CNF: at-least-one clauses per point, then the optional at-most-one clauses, then one
        clause per solution triple and colour with repeated literals collapsed.
    """
    if k < 1 or n < 1:
        raise DomainError(f"k and n must be natural numbers, got k={k}, n={n}.")
    if n * k > MAX_DIMACS_VARIABLE:
        raise CapacityError(f"n*k={n * k} overflows DIMACS variable indices.")

    clauses = [[variable(x, c, k) for c in range(k)] for x in range(1, n + 1)]
    if at_most_one:
        for x in range(1, n + 1):
            for c in range(k):
                for d in range(c + 1, k):
                    clauses.append([-variable(x, c, k), -variable(x, d, k)])
    for x, y, z in enumerate_solutions(n):
        for c in range(k):
            literals = [-variable(x, c, k), -variable(y, c, k), -variable(z, c, k)]
            clauses.append(list(dict.fromkeys(literals)))

    logger.debug(f"cnf for k={k}, n={n}: {n * k} variables, {len(clauses)} clauses")
    return CNF(num_vars=n * k, clauses=clauses)


def encode_cnf(k: int, n: int, at_most_one: bool = False) -> str:
    return build_cnf(k, n, at_most_one=at_most_one).to_dimacs()


def parse_dimacs(text: str) -> CNF:
    num_vars, clauses, current = None, [], []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InvariantError(f"malformed DIMACS header {line!r}.")
            num_vars = int(parts[2])
            continue
        for token in line.split():
            literal = int(token)
            if literal == 0:
                clauses.append(current)
                current = []
            else:
                current.append(literal)
    if num_vars is None:
        raise InvariantError("DIMACS text has no 'p cnf' header.")
    return CNF(num_vars=num_vars, clauses=clauses)


def decode_model(model: Iterable[int], k: int, n: int) -> Colouring:
    """Colouring from a satisfying assignment; each point takes its least true colour."""
    true = {literal for literal in model if literal > 0}
    colours = []
    for x in range(1, n + 1):
        colour = next((c for c in range(k) if variable(x, c, k) in true), None)
        if colour is None:
            raise InvariantError(f"model leaves point {x} without a colour.")
        colours.append(colour)
    return Colouring(n=n, k=k, assignment=colours)


def _solve_external(cnf: CNF, solver_name: str) -> Optional[List[int]]:
    from pysat.solvers import Solver

    with Solver(name=solver_name, bootstrap_with=cnf.clauses) as solver:
        if not solver.solve():
            return None
        return solver.get_model()


def solve_cnf(
    cnf: CNF, engine: str = "dpll", meter: Optional[BudgetMeter] = None
) -> Optional[List[int]]:
    """Satisfying literals of ``cnf`` or None.

    ``engine`` is ``"dpll"`` for the internal solver or a PySAT solver name (``"sat"`` selects
    ``settings.sat_solver``).
    """
    if engine == "dpll":
        return dpll.solve(cnf.clauses, cnf.num_vars, meter=meter)
    name = settings.sat_solver if engine == "sat" else engine
    return _solve_external(cnf, name)


def feasible_via_cnf(
    k: int, n: int, engine: str = "dpll", budget: Optional[Budget] = None
) -> SearchOutcome:
    """Feasibility of (k, n) decided on the DIMACS encoding instead of by backtracking."""
    meter = BudgetMeter(budget or Budget.default())
    if meter.exhausted:
        return SearchOutcome(status=Status.UNKNOWN, k=k, n=n)
    cnf = build_cnf(k, n)
    try:
        model = solve_cnf(cnf, engine=engine, meter=meter)
    except dpll.BudgetExhausted:
        return SearchOutcome(
            status=Status.UNKNOWN, k=k, n=n, nodes_explored=meter.nodes, seconds=meter.elapsed
        )

    if model is None:
        status, witness = Status.NOT_COLOURABLE, None
    else:
        colouring = decode_model(model, k, n)
        verdict = verify_colouring(colouring)
        if not verdict.clean:
            raise InvariantError(f"{engine} model decodes to a bad colouring: {verdict.to_text()}")
        status, witness = Status.COLOURABLE, colouring.assignment
    logger.info(f"{engine}(k={k}, n={n}): {status.value}")
    return SearchOutcome(
        status=status,
        k=k,
        n=n,
        witness=witness,
        nodes_explored=meter.nodes,
        seconds=meter.elapsed,
    )


def agrees(outcomes: Sequence[SearchOutcome]) -> bool:
    """True when all decided outcomes carry the same verdict."""
    decided = {outcome.status for outcome in outcomes if outcome.status != Status.UNKNOWN}
    return len(decided) <= 1
