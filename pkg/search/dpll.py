"""A deliberately small DPLL: unit propagation and branching on the first unassigned variable.

It serves as an independent oracle for the backtracking search, not as a fast solver.
"""

import logging
from typing import Dict, List, Optional

from core.budget import BudgetMeter

logger = logging.getLogger(__name__)


class BudgetExhausted(Exception):
    pass


def _simplify(clauses: List[List[int]], literal: int) -> Optional[List[List[int]]]:
    """Clauses under ``literal = True``; None on an empty clause."""
    reduced = []
    for clause in clauses:
        if literal in clause:
            continue
        if -literal in clause:
            clause = [other for other in clause if other != -literal]
            if not clause:
                return None
        reduced.append(clause)
    return reduced


def _propagate(
    clauses: List[List[int]], assignment: Dict[int, bool]
) -> Optional[List[List[int]]]:
    while True:
        unit = next((clause[0] for clause in clauses if len(clause) == 1), None)
        if unit is None:
            return clauses
        assignment[abs(unit)] = unit > 0
        clauses = _simplify(clauses, unit)
        if clauses is None:
            return None


def _dpll(
    clauses: List[List[int]], assignment: Dict[int, bool], meter: Optional[BudgetMeter]
) -> Optional[Dict[int, bool]]:
    if meter is not None and not meter.spend():
        raise BudgetExhausted()

    clauses = _propagate(clauses, assignment)
    if clauses is None:
        return None
    if not clauses:
        return assignment

    var = min(abs(literal) for clause in clauses for literal in clause)
    for literal in (var, -var):
        reduced = _simplify(clauses, literal)
        if reduced is None:
            continue
        result = _dpll(reduced, {**assignment, var: literal > 0}, meter)
        if result is not None:
            return result
    return None


def solve(
    clauses: List[List[int]], num_vars: int, meter: Optional[BudgetMeter] = None
) -> Optional[List[int]]:
    """Returns a full model as signed literals 1..num_vars, or None when unsatisfiable.

    Variables left free by the search are reported false.
    """
    if any(len(clause) == 0 for clause in clauses):
        return None
    assignment = _dpll([list(clause) for clause in clauses], {}, meter)
    if assignment is None:
        logger.debug(f"dpll: unsatisfiable ({len(clauses)} clauses)")
        return None
    return [var if assignment.get(var, False) else -var for var in range(1, num_vars + 1)]
