from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from sparsenull.lp import (LpProblem, LpStatus, l1_min_equality, linf_feasible_below_one,
                           simplex_solve)
from sparsenull.ratlinalg import Mat, particular_solution, rank, vec

F = Fraction


def test_simplex_examples():
    out = simplex_solve(LpProblem((1,), Mat.from_rows([[1]]), (3,)))
    assert out.status is LpStatus.OPTIMAL and out.solution == (3,)
    out = simplex_solve(LpProblem((-1,), Mat.zeros(0, 1), ()))
    assert out.status is LpStatus.UNBOUNDED
    out = simplex_solve(LpProblem((1, 1), Mat.from_rows([[1, 1]]), (1,)))
    assert out.status is LpStatus.OPTIMAL and out.objective_value == 1


def test_simplex_infeasible_and_free_variables():
    out = simplex_solve(LpProblem((1,), Mat.from_rows([[1]]), (-1,)))
    assert out.status is LpStatus.INFEASIBLE
    # free variable pinned by the constraint: x = -2
    out = simplex_solve(LpProblem((1,), Mat.from_rows([[1]]), (-2,), lower=(None,)))
    assert out.status is LpStatus.OPTIMAL and out.solution == (-2,)
    # shifted lower bound x >= 5
    out = simplex_solve(LpProblem((1, 0), Mat.from_rows([[1, -1]]), (0,), lower=(5, 0)))
    assert out.solution == (5, 5) and out.objective_value == 5


def test_simplex_redundant_rows():
    A = Mat.from_rows([[1, 1], [2, 2]])
    out = simplex_solve(LpProblem((1, 2), A, (4, 8)))
    assert out.status is LpStatus.OPTIMAL and out.solution == (4, 0)


def test_lp_problem_validation():
    with pytest.raises(ValueError):
        LpProblem((1, 2), Mat.from_rows([[1]]), (1,))
    with pytest.raises(ValueError):
        LpProblem((1,), Mat.from_rows([[1]]), (1, 2))


def _vertex_optimum(c, A, b):
    """Brute-force optimum over basic feasible solutions (bounded problems)."""
    best = None
    n = A.cols
    for k in range(min(A.rows, n) + 1):
        for S in combinations(range(n), k):
            sub = A.submatrix(None, S)
            if rank(sub) != k:
                continue
            z = particular_solution(sub, b)
            if z is None or any(v < 0 for v in z):
                continue
            x = [F(0)] * n
            for i, j in enumerate(S):
                x[j] = z[i]
            val = sum(ci * xi for ci, xi in zip(c, x))
            best = val if best is None or val < best else best
    return best


@given(st.integers(1, 3), st.integers(1, 4), st.data())
def test_simplex_matches_vertex_enumeration(m, n, data):
    ints = lambda k: data.draw(st.lists(st.integers(-3, 3), min_size=k, max_size=k))  # noqa: E731
    A = Mat(m, n, vec(ints(m * n)))
    # nonnegative costs keep the problem bounded whenever it is feasible
    c = vec(abs(v) for v in ints(n))
    b = A @ vec(abs(v) for v in ints(n))
    out = simplex_solve(LpProblem(c, A, b))
    assert out.status is LpStatus.OPTIMAL
    assert A @ out.solution == b and all(v >= 0 for v in out.solution)
    assert out.objective_value == _vertex_optimum(c, A, b)


def test_simplex_duals_certify_optimality():
    A = Mat.from_rows([[1, 1, 1], [1, 2, 0]])
    c, b = vec((2, 3, 1)), vec((4, 5))
    out = simplex_solve(LpProblem(c, A, b))
    y = out.duals
    # dual feasibility and zero duality gap
    assert all(cj - sum(A[i, j] * y[i] for i in range(2)) >= 0 for j, cj in enumerate(c))
    assert sum(bi * yi for bi, yi in zip(b, y)) == out.objective_value


def test_l1_min_equality_examples():
    assert l1_min_equality(Mat.identity(3), (1, -2, 5)) == (1, -2, 5)
    assert l1_min_equality(Mat.from_rows([[1, 2]]), (2,)) == (0, 1)
    assert l1_min_equality(Mat.from_rows([[1], [0]]), (0, 1)) is None


def test_l1_min_equality_brute_force():
    D = Mat.from_rows([[1, 2, -1, 0], [0, 1, 1, 3]])
    s = vec((3, 1))
    v = l1_min_equality(D, s)
    assert D @ v == s
    # optimum of min ||v||_1 is attained at a basic solution of the split system
    best = None
    for S in combinations(range(4), 2):
        z = particular_solution(D.submatrix(None, S), s)
        if z is not None and rank(D.submatrix(None, S)) == 2:
            val = sum(abs(t) for t in z)
            best = val if best is None else min(best, val)
    assert sum(abs(t) for t in v) == best


def test_linf_feasible_examples():
    h = linf_feasible_below_one(Mat.identity(2), Mat.zeros(2, 0), (1, -1))
    assert h == (1, -1)
    assert linf_feasible_below_one(Mat.from_rows([[1]]), Mat.from_rows([[2]]), (1,)) is None
    h = linf_feasible_below_one(Mat.from_rows([[1], [0]]), Mat.from_rows([[0], [1]]), (1,))
    assert h[0] == 1 and abs(h[1]) < 1


def test_linf_boundary_is_strict():
    # F^T h = h exactly when E^T h = 1 forces h = 1: t* = 1 is not below one
    assert linf_feasible_below_one(Mat.from_rows([[1]]), Mat.from_rows([[1]]), (1,)) is None


@given(st.data())
def test_linf_witness_is_valid(data):
    k = data.draw(st.integers(1, 3))
    ne, nf = data.draw(st.integers(1, 2)), data.draw(st.integers(0, 3))
    ints = lambda c: vec(data.draw(st.lists(st.integers(-3, 3), min_size=c, max_size=c)))  # noqa: E731
    E, Fm = Mat(k, ne, ints(k * ne)), Mat(k, nf, ints(k * nf))
    g = vec(data.draw(st.lists(st.sampled_from((-1, 1)), min_size=ne, max_size=ne)))
    h = linf_feasible_below_one(E, Fm, g)
    if h is not None:
        assert E.T @ h == g
        assert all(abs(v) < 1 for v in Fm.T @ h)


def test_linf_absence_is_exact():
    # h1 + h2 = 1 is met by h = (1/2, 1/2) with both entries below one, but
    # F^T h = h1 + h2 = 1 can never drop below one
    E = Mat.from_rows([[1], [1]])
    assert linf_feasible_below_one(E, Mat.identity(2), (1,)) == (F(1, 2), F(1, 2))
    assert linf_feasible_below_one(E, Mat.from_rows([[1], [1]]), (1,)) is None
