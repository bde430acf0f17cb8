"""Instance generators: integer Vandermonde matrices, the hardness
construction built from them, and seeded random matrices."""
from __future__ import annotations

import random
from fractions import Fraction

from ..ratlinalg import Mat, det, hstack, kron, rank, vstack
from .instances import MuInstance


def gen_unsparsifiable(m: int, n: int) -> Mat:
    """m x n matrix with entry (i, j) = i ** j for i = 1..m, j = 0..n-1.

    Every square submatrix is nonsingular, so the matrix is completely
    unsparsifiable and stacking it under I_n gives an optimally sparse matrix.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if m < n:
        raise ValueError(f"need m >= n, got m={m}, n={n}")
    return Mat.from_rows([[i ** j for j in range(n)] for i in range(1, m + 1)])


def stacked_unsparsifiable(m: int, n: int) -> Mat:
    """``(I_n; V)`` with V = gen_unsparsifiable(m, n); (m + n) x n."""
    return vstack(Mat.identity(n), gen_unsparsifiable(m, n))


def gen_hardness_instance(inst: MuInstance, p: int | None = None, q: int | None = None) -> Mat:
    """Block matrix ``[[I_p (x) y, 0], [X (x) y, I_q (x) A]]``.

    X is the bottom q x p block of the (p+q) x p integer Vandermonde matrix, so
    ``(I_p; X)`` is optimally sparse.  p and q default to n**2.
    """
    A, y = inst.A, Mat.column(inst.y)
    m, n = A.shape
    p = n * n if p is None else p
    q = n * n if q is None else q
    if p < 1:
        raise ValueError("p must be at least 1")
    if q < p:
        raise ValueError(f"need q >= p, got p={p}, q={q}")
    X = gen_unsparsifiable(p + q, p).submatrix(range(p, p + q), None)
    left = kron(vstack(Mat.identity(p), X), y)
    right = vstack(Mat.zeros(p * m, q * n), kron(Mat.identity(q), A))
    return hstack(left, right)


def random_matrix(m: int, n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> Mat:
    return Mat(m, n, tuple(Fraction(rng.randint(lo, hi)) for _ in range(m * n)))


def random_full_rank(m: int, n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> Mat:
    if n > m:
        raise ValueError("full column rank needs n <= m")
    while True:
        M = random_matrix(m, n, rng, lo, hi)
        if rank(M) == n:
            return M


def random_invertible(n: int, rng: random.Random, lo: int = -2, hi: int = 2) -> Mat:
    while True:
        X = random_matrix(n, n, rng, lo, hi)
        if det(X) != 0:
            return X


def random_vector(n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> tuple:
    return tuple(Fraction(rng.randint(lo, hi)) for _ in range(n))


def random_sparse_vector(n: int, k: int, rng: random.Random, lo: int = -3, hi: int = 3) -> tuple:
    """Vector of length n with exactly k nonzero integer entries."""
    v = [Fraction(0)] * n
    choices = [x for x in range(lo, hi + 1) if x]
    for i in rng.sample(range(n), k):
        v[i] = Fraction(rng.choice(choices))
    return tuple(v)
