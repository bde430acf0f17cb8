from .exhaustive import (edr_bruteforce, elementary_vectors, ms_bruteforce, siv_bruteforce,
                         siv_exhaustive,
                         sns_bruteforce)
from .greedy import SolveTrace, TraceStep, column_transform, edr_solve, ms_greedy, siv, sns_solve
from .oracles import DEFAULT_MAX_ROWS, EXACT, L1, MuAnswer, MuOracle, mu_bruteforce, mu_l1

__all__ = [
    "DEFAULT_MAX_ROWS", "EXACT", "L1", "MuAnswer", "MuOracle", "SolveTrace", "TraceStep",
    "column_transform", "edr_bruteforce", "edr_solve", "elementary_vectors", "ms_bruteforce",
    "ms_greedy", "mu_bruteforce", "mu_l1", "siv", "siv_bruteforce", "siv_exhaustive", "sns_bruteforce", "sns_solve",
]
