"""Exhaustive optima used as independent oracles at desk scale.

Each routine searches the problem definition directly rather than going
through the reductions or the greedy algorithm it is meant to check.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from ..certify import enumerate_circuits
from ..errors import GuardrailExceeded
from ..ratlinalg import (Mat, hstack, l0, null_basis, particular_solution, rank,
                         rank_of_columns)
from ..problems.instances import EdrInstance, MsInstance, SivInstance, SnsInstance
from .oracles import DEFAULT_MAX_ROWS


def edr_bruteforce(inst: EdrInstance, max_cols: int = DEFAULT_MAX_ROWS) -> tuple:
    """Sparsest v with D v = s, by increasing support size (lexicographic ties)."""
    D, s = inst.D, inst.s
    n = D.cols
    if n > max_cols:
        raise GuardrailExceeded(f"exact EDR limited to {max_cols} columns, got {n}")
    for k in range(n + 1):
        for S in combinations(range(n), k):
            w = particular_solution(D.submatrix(None, S), s)
            if w is not None:
                v = [Fraction(0)] * n
                for i, j in enumerate(S):
                    v[j] = w[i]
                return tuple(v)
    raise AssertionError("s lies in col(D) by instance invariant")


def siv_bruteforce(inst: SivInstance, max_rows: int = DEFAULT_MAX_ROWS) -> tuple:
    """Sparsest vector in col(A) outside col(B), found by support enumeration.

    For a row set S the vectors of col(A) vanishing off S form ``A K`` where
    K spans the kernel of the complementary rows of A; such a vector escapes
    col(B) exactly when ``A K`` is not contained in col(B).
    """
    A, B = inst.A, inst.B
    m = A.rows
    if m > max_rows:
        raise GuardrailExceeded(f"exact SIV limited to {max_rows} rows, got {m}")
    rb = rank(B)
    for k in range(1, m + 1):
        for S in combinations(range(m), k):
            rest = [i for i in range(m) if i not in S]
            K = null_basis(A.submatrix(rest, None))
            if K.cols == 0:
                continue
            W = A @ K
            for j in range(W.cols):
                w = W.col(j)
                if rank(hstack(B, Mat.column(w))) > rb:
                    return w
    raise AssertionError("col(A) strictly contains col(B) by instance invariant")


def siv_exhaustive(inst: SivInstance, max_rows: int = DEFAULT_MAX_ROWS) -> tuple[tuple, int]:
    """:func:`siv_bruteforce` plus the lowest replaceable column outside B."""
    c = siv_bruteforce(inst, max_rows)
    coeffs = particular_solution(inst.A, c)
    j = next(k for k in range(inst.prefix) if coeffs[k])
    return c, j


def _normalized(v: tuple) -> tuple:
    lead = next(x for x in v if x)
    return tuple(x / lead for x in v)


def _greedy_basis(vectors, dim: int, nrows: int) -> list:
    """Matroid greedy: sparsest-first, keep a vector iff it raises the rank."""
    chosen = []
    for v in sorted(vectors, key=lambda v: (l0(v), v)):
        if rank_of_columns(chosen + [v], nrows) > len(chosen):
            chosen.append(v)
            if len(chosen) == dim:
                break
    return chosen


def elementary_vectors(B: Mat) -> list:
    """Minimal-support nonzero vectors of col(B), one per support, normalized.

    B must have full column rank.  Each such vector is ``B w`` where w spans the
    kernel of some n-1 independent rows of B.
    """
    m, n = B.shape
    seen = {}
    for Z in combinations(range(m), n - 1):
        BZ = B.submatrix(Z, None)
        K = null_basis(BZ)
        if K.cols != 1:
            continue
        v = _normalized(B @ K.col(0))
        seen.setdefault(v, None)
    return list(seen)


def ms_bruteforce(inst: MsInstance, max_rows: int = DEFAULT_MAX_ROWS) -> Mat:
    """Optimal matrix sparsification by greedy selection over elementary vectors."""
    B = inst.B
    if B.rows > max_rows:
        raise GuardrailExceeded(f"exact MS limited to {max_rows} rows, got {B.rows}")
    if B.cols == 0:
        return B
    cols = _greedy_basis(elementary_vectors(B), B.cols, B.rows)
    return Mat.from_cols(cols, rows=B.rows)


def sns_bruteforce(inst: SnsInstance, max_cols: int = 12) -> Mat:
    """Optimal sparse null space by greedy selection over column circuits of A."""
    A = inst.A
    c = A.cols - rank(A)
    if c == 0:
        return Mat.zeros(A.cols, 0)
    kernels = [_normalized(circ.circuit_kernel)
               for circ in enumerate_circuits(A, A.cols, max_cols=max_cols)]
    return Mat.from_cols(_greedy_basis(kernels, c, A.cols), rows=A.cols)
