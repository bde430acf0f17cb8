"""Exact rational linear programming (two-phase simplex, Bland's rule).

Problems are stated as ``minimize c^T z subject to A z = b`` with an optional
lower bound per variable (``None`` marks a free variable).  Internally every
variable is shifted or split so the tableau works over ``z >= 0``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .ratlinalg import Mat, hstack, particular_solution, rat, vec

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LpStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpProblem:
    objective: tuple
    A: Mat
    b: tuple
    lower: Optional[tuple] = None  # per variable; None entry = free

    def __post_init__(self):
        object.__setattr__(self, "objective", vec(self.objective))
        object.__setattr__(self, "b", vec(self.b))
        if self.A.cols != len(self.objective):
            raise ValueError("constraint matrix column count differs from objective length")
        if self.A.rows != len(self.b):
            raise ValueError("rhs length differs from constraint row count")
        if self.lower is None:
            object.__setattr__(self, "lower", (_ZERO,) * len(self.objective))
        else:
            if len(self.lower) != len(self.objective):
                raise ValueError("lower bounds length differs from objective length")
            object.__setattr__(self, "lower",
                               tuple(None if x is None else rat(x) for x in self.lower))


@dataclass(frozen=True)
class LpOutcome:
    status: LpStatus
    solution: Optional[tuple] = None
    objective_value: Optional[Fraction] = None
    duals: Optional[tuple] = None  # one multiplier per equality row


class _Tableau:
    """Dense simplex tableau over ``z >= 0`` with rows ``T[i] = [coeffs..., rhs]``."""

    def __init__(self, rows, basis, ncols):
        self.T = rows
        self.basis = basis
        self.n = ncols

    def pivot(self, r, c):
        T = self.T
        prow = T[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow[:] = [x * inv for x in prow]
        nz = [k for k, x in enumerate(prow) if x]
        for i, row in enumerate(T):
            if i != r:
                f = row[c]
                if f:
                    for k in nz:
                        row[k] -= f * prow[k]
        self.basis[r] = c

    def run(self, cost, allowed):
        """Minimize ``cost . z`` from the current basic feasible solution.

        Bland's rule: entering variable is the lowest-index column with negative
        reduced cost; ties in the ratio test go to the lowest basic index.
        """
        while True:
            m = len(self.T)
            # reduced costs d_j = c_j - c_B B^-1 a_j
            cb = [cost[self.basis[i]] for i in range(m)]
            enter = None
            for j in range(self.n):
                if not allowed[j] or j in self.basis:
                    continue
                d = cost[j] - sum((cb[i] * self.T[i][j] for i in range(m) if cb[i] and self.T[i][j]),
                                  _ZERO)
                if d < 0:
                    enter = j
                    break
            if enter is None:
                return LpStatus.OPTIMAL
            best = None
            for i in range(m):
                a = self.T[i][enter]
                if a > 0:
                    ratio = self.T[i][-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return LpStatus.UNBOUNDED
            self.pivot(best[1], enter)


def _standard_form(p: LpProblem):
    """Map variables onto nonnegative columns.

    Returns ``(A_std, b_std, c_std, recover)`` where ``recover`` maps a
    standard-form point back to the original variables.
    """
    cols = []
    cost = []
    back = []  # (kind, index or pair, shift)
    b = list(p.b)
    for j in range(p.A.cols):
        a = p.A.col(j)
        lo = p.lower[j]
        if lo is None:
            cols.append(a)
            cols.append(tuple(-x for x in a))
            cost.extend([p.objective[j], -p.objective[j]])
            back.append(("free", len(cols) - 2, _ZERO))
        else:
            if lo:
                b = [bi - ai * lo for bi, ai in zip(b, a)]
            cols.append(a)
            cost.append(p.objective[j])
            back.append(("shift", len(cols) - 1, lo))
    A_std = Mat.from_cols(cols, rows=p.A.rows)

    def recover(z):
        x = []
        for kind, k, lo in back:
            x.append(z[k] - z[k + 1] if kind == "free" else z[k] + lo)
        return tuple(x)

    return A_std, tuple(b), tuple(cost), recover


def simplex_solve(p: LpProblem) -> LpOutcome:
    """Exact optimum of an LP over the rationals; deterministic for a given input."""
    A, b, c, recover = _standard_form(p)
    m, n = A.rows, A.cols
    offset = sum((cj * lo for cj, lo in zip(p.objective, p.lower) if lo), _ZERO)

    # phase 1: one artificial per row, rows flipped so that rhs >= 0
    rows = []
    for i in range(m):
        r = list(A.row(i)) + [_ONE if k == i else _ZERO for k in range(m)] + [b[i]]
        if b[i] < 0:
            r = [-x for x in r]
            r[n + i] = _ONE
        rows.append(r)
    tab = _Tableau(rows, [n + i for i in range(m)], n + m)
    cost1 = [_ZERO] * n + [_ONE] * m
    tab.run(cost1, [True] * (n + m))
    if sum((tab.T[i][-1] for i in range(m) if tab.basis[i] >= n), _ZERO) > 0:
        return LpOutcome(LpStatus.INFEASIBLE)

    # drive remaining (zero-level) artificials out; drop rows that are redundant
    i = 0
    while i < len(tab.T):
        if tab.basis[i] >= n:
            c_in = next((j for j in range(n) if tab.T[i][j]), None)
            if c_in is None:
                del tab.T[i]
                del tab.basis[i]
                continue
            tab.pivot(i, c_in)
        i += 1
    for r in tab.T:
        del r[n:n + m]
    tab.n = n

    status = tab.run(list(c), [True] * n)
    if status is LpStatus.UNBOUNDED:
        return LpOutcome(LpStatus.UNBOUNDED)
    z = [_ZERO] * n
    for i, j in enumerate(tab.basis):
        z[j] = tab.T[i][-1]
    x = recover(z)
    value = sum((cj * xj for cj, xj in zip(p.objective, x)), _ZERO)
    assert value == sum((ci * zi for ci, zi in zip(c, z)), _ZERO) + offset
    return LpOutcome(LpStatus.OPTIMAL, x, value, _duals(A, c, tab.basis))


def _duals(A: Mat, c, basis):
    # y with B^T y = c_B; rows removed as redundant get whatever the solve yields
    if not basis:
        return (_ZERO,) * A.rows
    B = A.submatrix(None, basis)
    y = particular_solution(B.T, [c[j] for j in basis])
    return y


def l1_min_equality(D: Mat, s: Sequence) -> Optional[tuple]:
    """Minimum-l1 solution of ``D v = s`` (``None`` when ``s`` is outside col(D)).

    Uses the split ``v = v+ - v-`` with both parts nonnegative.
    """
    s = vec(s)
    n = D.cols
    A = hstack(D, D.scale(-1))
    out = simplex_solve(LpProblem((_ONE,) * (2 * n), A, s))
    if out.status is not LpStatus.OPTIMAL:
        return None
    z = out.solution
    return tuple(z[j] - z[n + j] for j in range(n))


def linf_feasible_below_one(E: Mat, F: Mat, g: Sequence) -> Optional[tuple]:
    """Find ``h`` with ``E^T h = g`` and ``||F^T h||_inf < 1``.

    Solved as ``min t`` subject to ``E^T h = g`` and ``-t <= F^T h <= t``;
    the witness is returned only when the exact optimum satisfies ``t* < 1``.
    An empty ``F`` leaves only the equality system.
    """
    g = vec(g)
    if E.rows != F.rows:
        raise ValueError("E and F must have the same number of rows")
    k = E.rows          # dimension of h
    ne, nf = E.cols, F.cols
    # variables: h (free, k) | t (>= 0) | s+ (nf) | s- (nf)
    nv = k + 1 + 2 * nf
    rows, rhs = [], []
    Et, Ft = E.T, F.T
    for i in range(ne):
        rows.append(list(Et.row(i)) + [_ZERO] * (1 + 2 * nf))
        rhs.append(g[i])
    for i in range(nf):
        f = list(Ft.row(i))
        slack = [_ZERO] * (2 * nf)
        slack[i] = _ONE
        rows.append(f + [-_ONE] + slack)          # F^T h - t + s+ = 0
        rhs.append(_ZERO)
        slack = [_ZERO] * (2 * nf)
        slack[nf + i] = -_ONE
        rows.append(f + [_ONE] + slack)           # F^T h + t - s- = 0
        rhs.append(_ZERO)
    A = Mat.from_rows(rows, cols=nv)
    cost = [_ZERO] * k + [_ONE] + [_ZERO] * (2 * nf)
    lower = [None] * k + [_ZERO] * (1 + 2 * nf)
    out = simplex_solve(LpProblem(cost, A, rhs, tuple(lower)))
    if out.status is not LpStatus.OPTIMAL or out.objective_value >= 1:
        return None
    return out.solution[:k]
