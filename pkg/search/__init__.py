from search import backtrack
from search import cnf
from search import dpll
from search.backtrack import SearchOutcome, Status, SValue, compute_S, feasible
from search.cnf import build_cnf, decode_model, encode_cnf, feasible_via_cnf

__all__ = [
    "backtrack",
    "cnf",
    "dpll",
    "SearchOutcome",
    "Status",
    "SValue",
    "compute_S",
    "feasible",
    "build_cnf",
    "decode_model",
    "encode_cnf",
    "feasible_via_cnf",
]
