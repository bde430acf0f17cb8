"""Exact reductions between the four sparsity problems.

Each forward map returns the transformed instance together with its solution
back-map; the back-map closes over the source instance.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional

from ..ratlinalg import (Mat, column_basis, hstack, in_col_span, null_basis,
                         particular_solution)
from .instances import EdrInstance, MsInstance, MuInstance, SivInstance, SnsInstance


class TriviallySatisfiable(ValueError):
    """The MU target already lies in col(A); the optimum is 0."""


def edr_to_mu(inst: EdrInstance) -> tuple[MuInstance, Callable]:
    D, s = inst.D, inst.s
    y = particular_solution(D, s)
    A = null_basis(D)

    def back_map(x):
        Ax = A @ x
        return tuple(a - b for a, b in zip(y, Ax))

    return MuInstance(A, y), back_map


def mu_to_edr(inst: MuInstance) -> tuple[EdrInstance, Callable]:
    A_full, y = inst.A, inst.y
    A, pivots = column_basis(A_full)
    # rows of D span null(A^T), so A is a full null matrix for D
    D = null_basis(A.T).T
    s = D @ y

    def back_map(v):
        target = tuple(a - b for a, b in zip(y, v))
        xb = particular_solution(A, target)
        if xb is None:
            raise ValueError("back-map called on a vector that is not an EDR solution")
        x = [Fraction(0)] * A_full.cols
        for k, p in enumerate(pivots):
            x[p] = xb[k]
        return tuple(x)

    return EdrInstance(D, s), back_map


def sns_to_ms(inst: SnsInstance) -> tuple[Optional[MsInstance], Callable]:
    """``None`` in place of the MS instance when A has trivial kernel."""
    B = null_basis(inst.A)
    if B.cols == 0:
        return None, lambda N: Mat.zeros(inst.A.cols, 0)
    return MsInstance(B), lambda N: N


def ms_to_sns(inst: MsInstance) -> tuple[SnsInstance, Callable]:
    A = null_basis(inst.B.T).T
    return SnsInstance(A), lambda N: N


def mu_to_siv(inst: MuInstance) -> SivInstance:
    """Place y leftmost so that (a column basis of) A is the suffix B'."""
    if in_col_span(inst.A, inst.y):
        raise TriviallySatisfiable("y lies in col(A); min unsatisfy optimum is 0")
    A, _ = column_basis(inst.A)
    return SivInstance(hstack(Mat.column(inst.y), A), A)
