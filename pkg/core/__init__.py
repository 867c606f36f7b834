from core import budget
from core import colouring
from core import errors
from core import sets
from core import solutions
from core import verify
from core.budget import Budget, BudgetMeter
from core.colouring import Colouring, Run
from core.errors import (
    CapacityError,
    CoverageError,
    DomainError,
    InvariantError,
    PreconditionError,
    SqColourError,
)
from core.solutions import SolutionTriple, count_solutions, enumerate_solutions, is_solution
from core.verify import Verdict, verify_colouring

__all__ = [
    "budget",
    "colouring",
    "errors",
    "sets",
    "solutions",
    "verify",
    "Budget",
    "BudgetMeter",
    "Colouring",
    "Run",
    "CapacityError",
    "CoverageError",
    "DomainError",
    "InvariantError",
    "PreconditionError",
    "SqColourError",
    "SolutionTriple",
    "count_solutions",
    "enumerate_solutions",
    "is_solution",
    "Verdict",
    "verify_colouring",
]
