"""The four problems (plus SIV) as :class:`ProblemSpec` values with
exhaustive optima, the reductions between them, and random instance samplers."""
from __future__ import annotations

import random
from fractions import Fraction

from .problems import (EdrInstance, MsInstance, MuInstance, ProblemSpec, ReductionWitness,
                       SivInstance, SnsInstance, edr_to_mu, ms_to_sns, mu_to_edr, mu_to_siv,
                       random_full_rank, random_invertible, random_matrix, random_vector,
                       sns_to_ms)
from .ratlinalg import Mat, column_basis, in_col_span, l0, null_basis, particular_solution
from .solvers import (edr_bruteforce, ms_bruteforce, mu_bruteforce, siv_bruteforce,
                      sns_bruteforce)


def _sample_edr(inst: EdrInstance, rng: random.Random):
    y = particular_solution(inst.D, inst.s)
    N = null_basis(inst.D)
    z = random_vector(N.cols, rng)
    return tuple(a + b for a, b in zip(y, N @ z))


def _sample_mu(inst: MuInstance, rng: random.Random):
    return random_vector(inst.A.cols, rng)


def _sample_sns(inst: SnsInstance, rng: random.Random):
    N = null_basis(inst.A)
    return N @ random_invertible(N.cols, rng)


def _sample_ms(inst: MsInstance, rng: random.Random):
    return inst.B @ random_invertible(inst.B.cols, rng)


def _sample_siv(inst: SivInstance, rng: random.Random):
    w = list(random_vector(inst.A.cols, rng))
    if not any(w[:inst.prefix]):
        w[0] = Fraction(1)
    return inst.A @ w


EDR = ProblemSpec("EDR", lambda i, v: l0(v), lambda i, v: i.is_solution(v),
                  edr_bruteforce, _sample_edr)
MU = ProblemSpec("MU", lambda i, x: i.objective(x), lambda i, x: i.is_solution(x),
                 mu_bruteforce, _sample_mu)
SNS = ProblemSpec("SNS", lambda i, N: N.nnz(), lambda i, N: i.is_solution(N),
                  sns_bruteforce, _sample_sns)
MS = ProblemSpec("MS", lambda i, N: N.nnz(), lambda i, N: i.is_solution(N),
                 ms_bruteforce, _sample_ms)
SIV = ProblemSpec("SIV", lambda i, a: l0(a), lambda i, a: i.is_solution(a),
                  siv_bruteforce, _sample_siv)


def _mu_to_siv_forward(inst: MuInstance):
    siv = mu_to_siv(inst)

    def back(a):
        # a = alpha * y + B w with alpha != 0  ->  x = -w / alpha
        coeffs = particular_solution(siv.A, a)
        alpha, w = coeffs[0], coeffs[1:]
        xb = [-c / alpha for c in w]
        return _embed(inst.A, xb)

    return siv, back


def _embed(A: Mat, xb):
    """Lift coefficients on a column basis of A to a vector on all columns."""
    _, piv = column_basis(A)
    x = [Fraction(0)] * A.cols
    for k, p in enumerate(piv):
        x[p] = xb[k]
    return tuple(x)


REDUCTIONS = {
    "edr_to_mu": ReductionWitness("edr_to_mu", EDR, MU, edr_to_mu),
    "mu_to_edr": ReductionWitness("mu_to_edr", MU, EDR, mu_to_edr),
    "sns_to_ms": ReductionWitness("sns_to_ms", SNS, MS, sns_to_ms),
    "ms_to_sns": ReductionWitness("ms_to_sns", MS, SNS, ms_to_sns),
    "mu_to_siv": ReductionWitness("mu_to_siv", MU, SIV, _mu_to_siv_forward),
}


# instance samplers: matrices up to 5 x 5 with entries in -3..3 -------------

def _shape(rng, max_rows=5, max_cols=5):
    return rng.randint(1, max_rows), rng.randint(1, max_cols)


def sample_edr(rng: random.Random) -> EdrInstance:
    m, n = _shape(rng)
    D = random_matrix(m, n, rng)
    return EdrInstance(D, D @ random_vector(n, rng))


def sample_mu(rng: random.Random) -> MuInstance:
    m, n = _shape(rng)
    return MuInstance(random_matrix(m, n, rng), random_vector(m, rng))


def sample_mu_unsatisfied(rng: random.Random) -> MuInstance:
    while True:
        inst = sample_mu(rng)
        if not in_col_span(inst.A, inst.y):
            return inst


def sample_sns(rng: random.Random) -> SnsInstance:
    m, n = _shape(rng)
    return SnsInstance(random_matrix(m, n, rng))


def sample_ms(rng: random.Random) -> MsInstance:
    m = rng.randint(1, 5)
    n = rng.randint(1, m)
    return MsInstance(random_full_rank(m, n, rng))


SAMPLERS = {
    "edr_to_mu": sample_edr,
    "mu_to_edr": sample_mu,
    "sns_to_ms": sample_sns,
    "ms_to_sns": sample_ms,
    "mu_to_siv": sample_mu_unsatisfied,
}
