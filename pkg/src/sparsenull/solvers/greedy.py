"""Oracle-driven algorithms: sparsest independent vector via min unsatisfy,
greedy matrix sparsification, and the SNS/EDR solvers built on them."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..ratlinalg import Mat, in_col_span, l0, rank, same_column_space, solve_matrix
from ..problems.instances import EdrInstance, MsInstance, MuInstance, SivInstance, SnsInstance
from ..problems.reductions import edr_to_mu, sns_to_ms
from .oracles import EXACT, MuOracle


def siv(inst: SivInstance, oracle: MuOracle = EXACT) -> tuple[tuple, int]:
    """Sparsest independent vector through one MU query per column outside B.

    Returns ``(c, j)``: c lies in col(A) but not col(B), and column j of A may
    be replaced by c without changing col(A).  Ties keep the lowest j.
    """
    A, B = inst.A, inst.B
    best, best_j, s = None, None, A.rows + 1
    for j in range(inst.prefix):
        a_j = A.col(j)
        if in_col_span(B, a_j):
            continue
        A_j = A.drop_col(j)
        ans = oracle(MuInstance(A_j, a_j))
        # the residual a_j - A_j x lies in col(A) and needs column j
        c = ans.residual
        if ans.l0 < s:
            best, best_j, s = c, j, ans.l0
    return best, best_j


@dataclass(frozen=True)
class TraceStep:
    iteration: int
    column: tuple
    l0: int
    replaced_index: int  # index of the replaced column in the input matrix
    state: SivInstance = field(repr=False, compare=False)


@dataclass
class SolveTrace:
    steps: list = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    def l0_sequence(self) -> list[int]:
        return [s.l0 for s in self.steps]


def ms_greedy(inst: MsInstance, oracle: MuOracle = EXACT,
              siv_solver: Callable | None = None) -> tuple[Mat, SolveTrace]:
    """Greedy matrix sparsification, one column per iteration.

    The working matrix keeps n columns: untouched input columns on the left and
    the columns found so far on the right.  Each iteration asks for the
    sparsest vector outside the span of the found block, drops the column it
    replaces and prepends the new vector to the found block.  The output puts
    each found vector at the position of the input column it replaced, so an
    already optimally sparse input comes back unchanged.

    ``siv_solver`` replaces the oracle-driven :func:`siv` when given.
    """
    if siv_solver is None:
        siv_solver = lambda state: siv(state, oracle)  # noqa: E731
    B_in = inst.B
    m, n = B_in.shape
    cols = B_in.columns()
    labels = list(range(n))
    found = 0
    trace = SolveTrace()
    for it in range(n):
        A = Mat.from_cols(cols, rows=m)
        state = SivInstance(A, A.submatrix(None, range(n - found, n)))
        c, j = siv_solver(state)
        trace.steps.append(TraceStep(it, c, l0(c), labels[j], state))
        del cols[j]
        del labels[j]
        cols.insert(n - found - 1, c)
        labels.insert(n - found - 1, -1)
        found += 1
    # put every found column where the input column it replaced was
    placed = [None] * n
    for step, c in zip(reversed(trace.steps), cols):
        placed[step.replaced_index] = c
    out = Mat.from_cols(placed, rows=m)
    if rank(out) != n or not same_column_space(out, B_in):
        raise AssertionError("greedy output is not column equivalent to its input")
    return out, trace


def column_transform(B: Mat, N: Mat) -> Mat:
    """The invertible X with ``N = B X`` (B of full column rank)."""
    X = solve_matrix(B, N)
    if X is None:
        raise ValueError("N is not in the column span of B")
    return X


def sns_solve(inst: SnsInstance, oracle: MuOracle = EXACT) -> Mat:
    ms, back = sns_to_ms(inst)
    if ms is None:
        return back(None)
    N, _ = ms_greedy(ms, oracle)
    return back(N)


def edr_solve(inst: EdrInstance, oracle: MuOracle = EXACT) -> tuple:
    mu, back = edr_to_mu(inst)
    return back(oracle(mu).x)
