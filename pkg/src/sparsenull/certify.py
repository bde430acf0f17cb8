"""Certificates and verdicts.

* candidate submatrices and the optimal-sparsity test built on them;
* the nonsingular-subsquare hypothesis that makes a matrix completely
  unsparsifiable;
* dual (Fuchs-type) certificates showing that l1 minimization recovers the
  sparse answer, for each of the four problems, and the pseudoinverse
  conditions that imply them.

Absence of a certificate is a neutral outcome: it never proves non-optimality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, gcd, lcm
from typing import Iterator, Optional, Sequence

from .errors import GuardrailExceeded
from .lp import linf_feasible_below_one
from .ratlinalg import (Mat, all_subsquares_nonsingular, det, hstack, induced_inf, l0,
                        norms, null_basis, pseudoinverse, rank, sgn, solve_matrix, support,
                        vec, vstack)

MAX_CIRCUIT_COLS = 12
MAX_SUBSQUARES = 200_000


@dataclass(frozen=True)
class CandidateSubmatrix:
    """Row-inclusive submatrix ``A(R, C)`` whose columns form a circuit.

    ``circuit_kernel`` is a full-length vector supported exactly on C with
    ``A(R, C)`` annihilating its restriction; it is primitive integral with a
    positive leading entry.
    """

    R: tuple
    C: tuple
    circuit_kernel: tuple


def _primitive(v: Sequence[Fraction]) -> tuple:
    d = lcm(*(x.denominator for x in v))
    ints = [int(x * d) for x in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    lead = next(a for a in ints if a)
    if lead < 0:
        g = -g
    return tuple(Fraction(a // g) for a in ints)


def _circuit_on(A: Mat, rows: Sequence[int], C: Sequence[int]) -> Optional[tuple]:
    """Kernel vector of ``A(rows, C)`` if those columns form a circuit."""
    K = null_basis(A.submatrix(rows, C))
    if K.cols != 1:
        return None
    k = K.col(0)
    if not all(k):
        return None
    x = [Fraction(0)] * A.cols
    for j, val in zip(C, _primitive(k)):
        x[j] = val
    return tuple(x)


def _annihilating_rows(A: Mat, x: tuple) -> tuple:
    return tuple(i for i, v in enumerate(A @ x) if not v)


def _check_cols(A: Mat, max_cols: int):
    if A.cols > max_cols:
        raise GuardrailExceeded(f"circuit enumeration limited to {max_cols} columns, got {A.cols}")


def enumerate_circuits(A: Mat, max_size: int | None = None,
                       max_cols: int = MAX_CIRCUIT_COLS) -> Iterator[CandidateSubmatrix]:
    """Minimal dependent column sets of A, by increasing size then lexicographically.

    The row set of each yielded candidate is computed from the kernel vector,
    so for these full-column circuits it is every row of A.
    """
    _check_cols(A, max_cols)
    max_size = A.cols if max_size is None else min(max_size, A.cols)
    rows = range(A.rows)
    for k in range(1, max_size + 1):
        for C in combinations(range(A.cols), k):
            x = _circuit_on(A, rows, C)
            if x is not None:
                yield CandidateSubmatrix(_annihilating_rows(A, x), C, x)


def enumerate_candidates(A: Mat, max_size: int | None = None,
                         max_cols: int = MAX_CIRCUIT_COLS) -> Iterator[CandidateSubmatrix]:
    """Every candidate submatrix ``A(R, C)``.

    For each column set C, every choice of |C| - 1 rows whose restriction has a
    one-dimensional, fully supported kernel seeds a circuit; R is then all rows
    annihilating that kernel vector, which makes ``A(R, C)`` row-inclusive.
    Duplicates (same C and kernel) are yielded once.
    """
    _check_cols(A, max_cols)
    max_size = A.cols if max_size is None else min(max_size, A.cols)
    for k in range(1, max_size + 1):
        for C in combinations(range(A.cols), k):
            seen = set()
            for R0 in combinations(range(A.rows), k - 1):
                x = _circuit_on(A, R0, C)
                if x is None or x in seen:
                    continue
                seen.add(x)
                yield CandidateSubmatrix(_annihilating_rows(A, x), C, x)


def is_candidate(A: Mat, cand: CandidateSubmatrix) -> bool:
    """Recompute both defining properties of a candidate submatrix."""
    sub = A.submatrix(cand.R, cand.C)
    r = rank(sub)
    if r != len(cand.C) - 1:
        return False
    # minimal dependence: the one-dimensional kernel must use every column
    if not all(null_basis(sub).col(0)):
        return False
    for i in range(A.rows):
        if i not in cand.R:
            if rank(vstack(sub, A.submatrix([i], cand.C))) == r:
                return False
    return True


@dataclass(frozen=True)
class SparsityVerdict:
    optimal: bool
    x: Optional[tuple] = None          # sparsifying combination
    column: Optional[int] = None       # column that A x would replace
    candidate: Optional[CandidateSubmatrix] = None


def is_optimally_sparse(A: Mat, max_cols: int = MAX_CIRCUIT_COLS) -> SparsityVerdict:
    """A is optimally sparse iff no candidate ``A(R, C)`` has m - |R| < ||a_i||_0, i in C.

    On failure the witness is the first violation in enumeration order:
    smallest |C|, then lexicographic C, then lowest column i.
    """
    col_l0 = [l0(A.col(j)) for j in range(A.cols)]
    for cand in enumerate_candidates(A, max_cols=max_cols):
        ax = A.rows - len(cand.R)
        for i in cand.C:
            if ax < col_l0[i]:
                return SparsityVerdict(False, cand.circuit_kernel, i, cand)
    return SparsityVerdict(True)


def check_unsparsifiable_hypothesis(A: Mat, max_subsquares: int = MAX_SUBSQUARES) -> bool:
    """True when every square submatrix of A (m >= n) is nonsingular."""
    m, n = A.shape
    if m < n:
        raise ValueError(f"hypothesis needs m >= n, got {m}x{n}")
    count = sum(comb(m, k) * comb(n, k) for k in range(1, n + 1))
    if count > max_subsquares:
        raise GuardrailExceeded(f"{count} subsquares exceed the limit of {max_subsquares}")
    return all_subsquares_nonsingular(A, n).ok


# dual certificates -----------------------------------------------------------

@dataclass(frozen=True)
class FuchsCertificate:
    """Witness that l1 minimization returns the given sparse answer.

    ``witness`` is h (edr) or u (mu); ``split`` holds the index sets of the
    support block and its complement (columns for edr, rows for mu).
    """

    problem_tag: str
    witness: tuple
    split: tuple


@dataclass(frozen=True)
class CertificateFamily:
    """Per-column certificates for the matrix problems."""

    problem_tag: str
    certificates: tuple          # one entry per column, None where it failed
    failed: tuple = field(default=())

    @property
    def present(self) -> bool:
        return not self.failed


def split_certificate(tag: str, M0: Mat, M1: Mat, signs: Sequence) -> Optional[tuple]:
    """Solve the dual system for a given support split and sign pattern.

    * ``"edr"``/``"sns"`` (column split): h with ``M0^T h = signs`` and
      ``||M1^T h||_inf < 1``.
    * ``"mu"``/``"ms"`` (row split): u with ``M1^T u = -M0^T signs`` and
      ``||u||_inf < 1``.
    """
    signs = vec(signs)
    if tag in ("edr", "sns"):
        return linf_feasible_below_one(M0, M1, signs)
    if tag in ("mu", "ms"):
        g = tuple(-x for x in (M0.T @ signs))
        return linf_feasible_below_one(M1, Mat.identity(M1.rows), g)
    raise ValueError(f"unknown problem tag {tag!r}")


def fuchs_edr(D: Mat, v: Sequence) -> Optional[FuchsCertificate]:
    """Certificate that v is the unique minimum-l1 solution of ``D w = D v``.

    Besides the dual vector h this requires the support columns of D to be
    independent; without that, v cannot be the unique l1 minimizer.
    """
    v = vec(v)
    S = support(v)
    rest = tuple(j for j in range(D.cols) if j not in S)
    D0, D1 = D.submatrix(None, S), D.submatrix(None, rest)
    if rank(D0) != len(S):
        return None
    h = split_certificate("edr", D0, D1, [sgn(v[j]) for j in S])
    return None if h is None else FuchsCertificate("edr", h, (S, rest))


def fuchs_mu(A: Mat, y: Sequence, x: Sequence) -> Optional[FuchsCertificate]:
    """Certificate that the l1 route through EDR returns the residual of x.

    Rows are split into violated rows (A0, residual v) and satisfied rows A1.
    The certificate is u with ``A1^T u = -A0^T sgn(v)``, ``||u||_inf < 1``;
    additionally rank(A1) must equal rank(A), which makes the residual the
    unique l1 minimizer on the EDR side.
    """
    y, x = vec(y), vec(x)
    r = tuple(a - b for a, b in zip(y, A @ x))
    rows0 = support(r)
    rows1 = tuple(i for i in range(A.rows) if i not in rows0)
    A0, A1 = A.submatrix(rows0, None), A.submatrix(rows1, None)
    if rank(A1) != rank(A):
        return None
    u = split_certificate("mu", A0, A1, [sgn(r[i]) for i in rows0])
    return None if u is None else FuchsCertificate("mu", u, (rows0, rows1))


class NotColumnEquivalent(ValueError):
    pass


def _column_queries(B: Mat, C: Mat):
    """For each column c_i = B x_i, the MU query ``(B without b_j, b_j)`` that
    produces c_i / x_i[j], with j the lowest index where x_i[j] != 0."""
    X = solve_matrix(B, C)
    if X is None or X.rows != X.cols or det(X) == 0:
        raise NotColumnEquivalent("C is not B X for an invertible X")
    for i in range(C.cols):
        xi = X.col(i)
        j = next(k for k, a in enumerate(xi) if a)
        x = tuple(-xi[k] / xi[j] for k in range(B.cols) if k != j)
        yield i, j, B.drop_col(j), B.col(j), x


def fuchs_ms(B: Mat, C: Mat, tag: str = "ms") -> CertificateFamily:
    """Per-column certificates for the l1-driven sparsification of B.

    Column i of C is obtained from the MU query that removes column j of B
    (lowest j in the support of x_i).  That query's certificate is checked
    with column j removed from B, as the query itself sees it; keeping the
    column would make the system unsatisfiable since the dual vector must then
    be orthogonal to c_i while matching its signs.
    """
    certs, failed = [], []
    for i, _j, Bj, bj, x in _column_queries(B, C):
        cert = fuchs_mu(Bj, bj, x)
        certs.append(cert)
        if cert is None:
            failed.append(i)
    return CertificateFamily(tag, tuple(certs), tuple(failed))


def fuchs_sns(A: Mat, V: Mat) -> CertificateFamily:
    """Certificates for the l1-driven sparse null space pipeline.

    V must be a full null matrix of A.  The pipeline sparsifies the null basis
    B of A, so the check is the matrix-sparsification one for ``V = B X``.
    """
    c = A.cols - rank(A)
    if V.rows != A.cols or V.cols != c or not (A @ V).is_zero() or rank(V) != c:
        raise NotColumnEquivalent("V is not a full null matrix for A")
    if c == 0:
        return CertificateFamily("sns", ())
    return fuchs_ms(null_basis(A), V, tag="sns")


def corollary_conditions(tag: str, M0: Mat, M1: Mat) -> bool:
    """Pseudoinverse sufficient condition for the split certificate.

    Row splits (``"mu"``, ``"ms"``): row(M0) in row(M1) and the l-inf induced
    norm of ``(M1^T)^+ M0^T`` below 1.  Column splits (``"sns"``, ``"edr"``):
    col(M0) in col(M1) and the l1 induced norm of ``M0^+ M1`` below 1.  In
    both cases the bounded norm is the one that controls the dual witness
    ``-(M1^T)^+ M0^T signs`` resp. ``(M0^+)^T signs``.

    Raises :class:`~sparsenull.ratlinalg.RankDeficientError` when the
    pseudoinverse is undefined.
    """
    if tag in ("mu", "ms"):
        if M0.rows == 0:
            return True
        if rank(vstack(M1, M0)) != rank(M1):
            return False
        P = pseudoinverse(M1.T) @ M0.T
        return induced_inf(P) < 1
    if tag in ("sns", "edr"):
        if M0.cols == 0:
            return True
        if rank(hstack(M1, M0)) != rank(M1):
            return False
        Q = pseudoinverse(M0) @ M1
        return norms(Q).induced_11 < 1
    raise ValueError(f"unknown problem tag {tag!r}")
