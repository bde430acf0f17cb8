import random
from fractions import Fraction
from itertools import combinations

import pytest

from builders import certified_edr, certified_ms, certified_mu, corollary_split, sign_patterns
from sparsenull.certify import (CandidateSubmatrix, NotColumnEquivalent,
                                check_unsparsifiable_hypothesis, corollary_conditions,
                                enumerate_candidates, enumerate_circuits, fuchs_edr, fuchs_ms,
                                fuchs_mu, fuchs_sns, is_candidate, is_optimally_sparse,
                                split_certificate)
from sparsenull.errors import GuardrailExceeded
from sparsenull.lp import l1_min_equality
from sparsenull.problems import (MsInstance, MuInstance, gen_unsparsifiable, random_full_rank,
                                 random_matrix, stacked_unsparsifiable)
from sparsenull.ratlinalg import Mat, RankDeficientError, hstack, l0, rank, sgn
from sparsenull.solvers import EXACT, L1, ms_bruteforce, ms_greedy

F = Fraction


def M(rows):
    return Mat.from_rows(rows)


# circuits and candidates -----------------------------------------------------------

def test_enumerate_circuits_examples():
    circuits = list(enumerate_circuits(M([[1, 2]])))
    assert len(circuits) == 1
    assert circuits[0].C == (0, 1) and circuits[0].circuit_kernel == (2, -1)
    assert list(enumerate_circuits(Mat.identity(3))) == []
    V = gen_unsparsifiable(3, 3)
    dup = hstack(V, M([[1], [1], [1]]))
    assert any(c.C == (0, 3) for c in enumerate_circuits(dup, max_size=2))


def _is_circuit_by_definition(A, C):
    sub = A.submatrix(None, C)
    if rank(sub) != len(C) - 1:
        return False
    return all(rank(A.submatrix(None, D)) == len(D) for D in combinations(C, len(C) - 1))


def test_enumerate_circuits_complete():
    rng = random.Random(51)
    for _ in range(30):
        A = random_matrix(rng.randint(1, 3), rng.randint(1, 5), rng, -2, 2)
        got = {c.C for c in enumerate_circuits(A)}
        want = {C for k in range(1, A.cols + 1) for C in combinations(range(A.cols), k)
                if _is_circuit_by_definition(A, C)}
        assert got == want


def test_candidates_satisfy_invariants():
    rng = random.Random(52)
    for _ in range(20):
        A = random_matrix(rng.randint(2, 4), rng.randint(2, 4), rng, -1, 1)
        for cand in enumerate_candidates(A):
            assert is_candidate(A, cand)
            x = cand.circuit_kernel
            assert {j for j, v in enumerate(x) if v} == set(cand.C)
            assert all((A @ x)[i] == 0 for i in cand.R)
    assert not is_candidate(M([[1, 0], [0, 1]]), CandidateSubmatrix((0,), (0, 1), (0, 1)))


def test_guardrails():
    with pytest.raises(GuardrailExceeded):
        list(enumerate_circuits(Mat.zeros(1, 5), max_cols=4))
    with pytest.raises(GuardrailExceeded):
        check_unsparsifiable_hypothesis(gen_unsparsifiable(6, 6), max_subsquares=10)


# optimal sparsity -------------------------------------------------------------------

def test_is_optimally_sparse_examples():
    for n in range(1, 4):
        for m in range(n, 6):
            assert is_optimally_sparse(stacked_unsparsifiable(m, n)).optimal
    v = is_optimally_sparse(M([[1, 1], [1, 1], [0, 1]]))
    assert not v.optimal and v.candidate is not None
    # the witness combination is sparser than the column it replaces
    Ax = M([[1, 1], [1, 1], [0, 1]]) @ v.x
    assert l0(Ax) < l0(M([[1, 1], [1, 1], [0, 1]]).col(v.column))
    assert is_optimally_sparse(M([[3], [0], [-1]])).optimal


def test_optimal_sparsity_agrees_with_bruteforce():
    rng = random.Random(53)
    for _ in range(60):
        m = rng.randint(1, 5)
        n = rng.randint(1, min(3, m))
        B = random_full_rank(m, n, rng, -2, 2)
        verdict = is_optimally_sparse(B).optimal
        assert verdict == (B.nnz() == ms_bruteforce(MsInstance(B)).nnz())


def test_unsparsifiable_hypothesis():
    assert check_unsparsifiable_hypothesis(gen_unsparsifiable(4, 3))
    assert not check_unsparsifiable_hypothesis(Mat.identity(3))
    with pytest.raises(ValueError):
        check_unsparsifiable_hypothesis(M([[1, 2, 3]]))


def test_unsparsifiable_keeps_greedy_dense():
    for m, n in [(3, 2), (4, 3), (5, 2)]:
        A = gen_unsparsifiable(m, n)
        assert check_unsparsifiable_hypothesis(A)
        assert ms_greedy(MsInstance(A), EXACT)[0].nnz() >= (m - n + 1) * n


# dual certificates -----------------------------------------------------------------

def test_fuchs_edr_examples():
    cert = fuchs_edr(Mat.identity(3), (2, 0, -1))
    assert cert is not None and cert.witness[0] == 1 and cert.witness[2] == -1
    # duplicate of a support column with matching sign forces |D1^T h| = 1
    D = M([[1, 0, 1], [0, 1, 0]])
    assert fuchs_edr(D, (1, 0, 0)) is None


def test_fuchs_edr_soundness():
    rng = random.Random(54)
    for _ in range(20):
        D, v, cert = certified_edr(rng)
        h = cert.witness
        S, rest = cert.split
        assert D.submatrix(None, S).T @ h == tuple(sgn(v[j]) for j in S)
        assert all(abs(t) < 1 for t in D.submatrix(None, rest).T @ h)
        assert l1_min_equality(D, D @ v) == v


def test_fuchs_mu_examples():
    cert = fuchs_mu(Mat.identity(2), (3, 4), (3, 4))
    assert cert is not None and cert.split[0] == ()
    # A1 empty, A0^T sgn(v) != 0: nothing can satisfy A1^T u = -A0^T sgn(v)
    assert fuchs_mu(M([[1]]), (1,), (0,)) is None


def test_fuchs_mu_soundness():
    rng = random.Random(55)
    for _ in range(20):
        A, y, x, _ = certified_mu(rng)
        inst = MuInstance(A, y)
        assert L1(inst).l0 == EXACT(inst).l0 == inst.objective(x)


def test_fuchs_ms_examples():
    fam = fuchs_ms(Mat.identity(3), Mat.identity(3))
    assert fam.present and all(c is not None for c in fam.certificates)
    with pytest.raises(NotColumnEquivalent):
        fuchs_ms(Mat.identity(2), M([[1, 1], [1, 1]]))


def test_fuchs_ms_negative_control_lists_failures():
    # column 0 of C is reached from b_0 by adding multiples of b_1, b_2; the
    # resulting query has a residual that l1 cannot certify
    B = M([[1, 0, 0], [1, 1, 0], [1, 0, 1], [1, 1, 1]])
    C = B @ M([[1, 0, 0], [-1, 1, 0], [-1, 0, 1]])
    fam = fuchs_ms(B, C)
    assert not fam.present
    assert fam.failed and all(fam.certificates[i] is None for i in fam.failed)


def test_fuchs_ms_soundness():
    rng = random.Random(56)
    for _ in range(15):
        B, C = certified_ms(rng)
        assert ms_greedy(MsInstance(B), L1)[0].nnz() == C.nnz()


def test_fuchs_sns_examples():
    fam = fuchs_sns(M([[1, 1]]), M([[1], [-1]]))
    assert fam.problem_tag == "sns" and len(fam.certificates) == 1
    assert fuchs_sns(Mat.identity(2), Mat.zeros(2, 0)).present
    with pytest.raises(NotColumnEquivalent):
        fuchs_sns(M([[1, 1]]), M([[1], [1]]))


def test_split_certificate_validates_tag():
    with pytest.raises(ValueError):
        split_certificate("xyz", Mat.identity(1), Mat.identity(1), (1,))


# corollary --------------------------------------------------------------------------

def test_corollary_examples():
    assert corollary_conditions("mu", Mat.zeros(0, 2), M([[1, 0]]))
    assert corollary_conditions("edr", Mat.zeros(2, 0), M([[1], [0]]))
    # containment fails: row (0, 1) is not in the span of (1, 0)
    assert not corollary_conditions("mu", M([[0, F(1, 100)]]), M([[1, 0]]))
    # containment fails for columns: e_2 is not in col of e_1
    assert not corollary_conditions("edr", M([[0], [1]]), M([[1], [0]]))
    with pytest.raises(RankDeficientError):
        corollary_conditions("edr", M([[1, 1], [1, 1]]), M([[1], [1]]))


def test_corollary_row_norm_is_max_row_sum():
    # max column sum of P = (3/5, 3/5) is below one, yet u = -6/5 is forced
    A1, A0 = M([[1, 0]]), M([[F(3, 5), 0], [F(3, 5), 0]])
    assert not corollary_conditions("mu", A0, A1)
    assert split_certificate("mu", A0, A1, (1, 1)) is None


@pytest.mark.parametrize("tag", ["edr", "mu", "ms", "sns"])
def test_corollary_implies_split_certificate(tag):
    rng = random.Random(["edr", "mu", "ms", "sns"].index(tag))
    for _ in range(25):
        M0, M1 = corollary_split(rng, tag)
        k = M0.rows if tag in ("mu", "ms") else M0.cols
        for signs in sign_patterns(k):
            assert split_certificate(tag, M0, M1, signs) is not None
