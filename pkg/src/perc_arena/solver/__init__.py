from .minimax import SolveBudgetExceeded, SolveResult, Solver, solve_escape
from .lehman import (
    ContractedGraph,
    LehmanCertificate,
    LehmanOutcome,
    lehman_decide,
    pack_two_trees,
    verify_certificate,
)
from .trees import (
    TreeDecision,
    biregular_delta,
    biregular_r_star,
    breaker_turn_bound,
    decide_tree,
    maker_threshold,
)

__all__ = [
    "ContractedGraph",
    "LehmanCertificate",
    "LehmanOutcome",
    "SolveBudgetExceeded",
    "SolveResult",
    "Solver",
    "TreeDecision",
    "biregular_delta",
    "biregular_r_star",
    "breaker_turn_bound",
    "decide_tree",
    "lehman_decide",
    "maker_threshold",
    "pack_two_trees",
    "solve_escape",
    "verify_certificate",
]
