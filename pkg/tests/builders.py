"""Seeded fixture builders shared by the test modules."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from sparsenull.certify import corollary_conditions, fuchs_edr, fuchs_ms, fuchs_mu, fuchs_sns
from sparsenull.problems import (MsInstance, SnsInstance, random_full_rank, random_invertible,
                                 random_matrix, random_sparse_vector, random_vector)
from sparsenull.ratlinalg import Mat, hstack, rank, vstack
from sparsenull.solvers import EXACT, ms_greedy, sns_solve

# criterion number -> "PASS/FAIL" line, printed in the terminal summary
ACCEPTANCE: dict[int, str] = {}


def certified_edr(rng: random.Random):
    """(D, v, certificate) with a Fuchs certificate for v."""
    while True:
        m = rng.randint(2, 5)
        n = rng.randint(m + 1, m + 3)
        D = random_matrix(m, n, rng)
        v = random_sparse_vector(n, rng.randint(1, max(1, m // 2)), rng)
        cert = fuchs_edr(D, v)
        if cert is not None:
            return D, v, cert


def certified_mu(rng: random.Random):
    """(A, y, x, certificate): y = A x + sparse error, certified."""
    while True:
        m = rng.randint(3, 6)
        n = rng.randint(1, min(3, m - 1))
        A = random_matrix(m, n, rng)
        x = random_vector(n, rng)
        e = random_sparse_vector(m, rng.randint(1, 2), rng)
        y = tuple(a + b for a, b in zip(A @ x, e))
        cert = fuchs_mu(A, y, x)
        if cert is not None:
            return A, y, x, cert


def _structured_full_rank(rng: random.Random, m: int, n: int) -> Mat:
    while True:
        C0 = Mat.from_cols([random_sparse_vector(m, rng.randint(1, m - 1), rng)
                            for _ in range(n)], rows=m)
        if rank(C0) == n:
            return C0 @ random_invertible(n, rng, -1, 1)


def certified_ms(rng: random.Random):
    """(B, C) with C the exact greedy output and a present certificate family."""
    while True:
        m = rng.randint(3, 6)
        n = rng.randint(1, min(3, m - 1))
        if rng.random() < 0.5:
            B = _structured_full_rank(rng, m, n)
        else:
            B = random_full_rank(m, n, rng, -2, 2)
        C, _ = ms_greedy(MsInstance(B), EXACT)
        if fuchs_ms(B, C).present:
            return B, C


def certified_sns(rng: random.Random):
    """(A, V) with V the exact sparse null matrix and a present family, corank > 0."""
    while True:
        A = random_matrix(rng.randint(1, 4), rng.randint(2, 6), rng, -2, 2)
        V = sns_solve(SnsInstance(A), EXACT)
        if V.cols and fuchs_sns(A, V).present:
            return A, V


def _small(rng: random.Random, rows: int, cols: int, den: int) -> Mat:
    return Mat(rows, cols, tuple(Fraction(rng.randint(-1, 1), den) for _ in range(rows * cols)))


def corollary_split(rng: random.Random, tag: str):
    """(M0, M1) with containment by construction and corollary_conditions true.

    Row splits take ``M0 = W M1`` for a full-row-rank M1; column
    splits take ``M1 = M0 Z``, sometimes with one extra column, for a
    full-column-rank M0.
    """
    while True:
        if tag in ("mu", "ms"):
            n = rng.randint(1, 4)
            k = rng.randint(1, n)
            M1 = random_matrix(k, n, rng)
            if rank(M1) != k:
                continue
            p = rng.randint(1, 3)
            M0 = _small(rng, p, k, rng.randint(2, 4)) @ M1
        else:
            m = rng.randint(1, 4)
            p = rng.randint(1, m)
            M0 = random_matrix(m, p, rng)
            if rank(M0) != p:
                continue
            k = rng.randint(p, p + 2)
            M1 = M0 @ _small(rng, p, k, rng.randint(2, 4))
            if rng.random() < 0.5:
                M1 = hstack(M1, random_matrix(m, 1, rng))
        if corollary_conditions(tag, M0, M1):
            return M0, M1


def sign_patterns(k: int):
    return list(product((Fraction(-1), Fraction(1)), repeat=k))


def row_split_instance(M0: Mat, M1: Mat, signs, rng: random.Random):
    """MU instance whose violated rows are M0 with residual signs ``signs``."""
    A = vstack(M1, M0)
    x = random_vector(A.cols, rng)
    err = [Fraction(0)] * M1.rows + [s * rng.randint(1, 3) for s in signs]
    y = tuple(a + e for a, e in zip(A @ x, err))
    return A, y, x
