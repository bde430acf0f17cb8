"""Min-unsatisfy oracles: exhaustive enumeration and the l1 relaxation."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, NamedTuple, Optional

from ..errors import GuardrailExceeded
from ..lp import l1_min_equality
from ..ratlinalg import l0, particular_solution
from ..problems.instances import MuInstance
from ..problems.reductions import mu_to_edr

DEFAULT_MAX_ROWS = 18


def mu_bruteforce(inst: MuInstance, max_rows: int = DEFAULT_MAX_ROWS) -> tuple:
    """Exact min unsatisfy by enumerating satisfied row sets, largest first.

    Among row sets of equal size the lexicographically first consistent one
    wins, so the result is deterministic.
    """
    A, y = inst.A, inst.y
    m = A.rows
    if m > max_rows:
        raise GuardrailExceeded(f"exact min unsatisfy limited to {max_rows} rows, got {m}")
    for size in range(m, -1, -1):
        for S in combinations(range(m), size):
            x = particular_solution(A.submatrix(S, None), [y[i] for i in S])
            if x is not None:
                return x
    raise AssertionError("the empty row set is always consistent")


def mu_l1(inst: MuInstance) -> tuple:
    """l1 heuristic: reduce to EDR, minimize ||v||_1, map back."""
    edr, back = mu_to_edr(inst)
    v = l1_min_equality(edr.D, edr.s)
    assert v is not None, "EDR target is in col(D) by construction"
    return back(v)


class MuAnswer(NamedTuple):
    x: tuple
    residual: tuple
    l0: int


@dataclass(frozen=True)
class MuOracle:
    """Pluggable min-unsatisfy solver.

    ``kind`` is ``"exact"`` (exhaustive, limited to ``max_rows`` rows),
    ``"l1"`` (l1 relaxation) or ``"external"`` (any ``solver`` callable
    mapping a :class:`MuInstance` to ``x``).
    """

    kind: str = "exact"
    max_rows: int = DEFAULT_MAX_ROWS
    solver: Optional[Callable[[MuInstance], tuple]] = None

    def __post_init__(self):
        if self.kind not in ("exact", "l1", "external"):
            raise ValueError(f"unknown oracle kind {self.kind!r}")
        if self.kind == "external" and self.solver is None:
            raise ValueError("an external oracle needs a solver callable")

    def __call__(self, inst: MuInstance) -> MuAnswer:
        if self.kind == "exact":
            x = mu_bruteforce(inst, self.max_rows)
        elif self.kind == "l1":
            x = mu_l1(inst)
        else:
            x = tuple(self.solver(inst))
        r = inst.residual(x)
        return MuAnswer(x, r, l0(r))


EXACT = MuOracle("exact")
L1 = MuOracle("l1")
