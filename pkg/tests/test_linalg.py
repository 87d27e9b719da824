import itertools

import numpy as np
import pytest

from gabidulin.errors import LengthMismatchError, SingularMatrixError
from gabidulin.field import FieldCtx
from gabidulin.linalg import (
    contract,
    det,
    expand,
    is_independent,
    moore_matrix,
    nullspace_q,
    rank_distance,
    rank_q,
    rank_q_vector,
    rank_qm,
    solve,
    span_basis,
)
from tests.helpers import rand_elem


def minor_rank(M, nonzero):
    """Largest k with a nonzero k x k minor, by cofactor expansion."""
    def cofactor_det(A):
        if len(A) == 1:
            return A[0][0]
        total = None
        for j in range(len(A)):
            sub = [row[:j] + row[j + 1:] for row in A[1:]]
            term = A[0][j] * cofactor_det(sub)
            if j % 2:
                term = -term
            total = term if total is None else total + term
        return total

    rows, cols = len(M), len(M[0])
    for k in range(min(rows, cols), 0, -1):
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                if nonzero(cofactor_det([[M[i][j] for j in ci] for i in ri])):
                    return k
    return 0


class TestRankQ:
    def test_examples(self, F8):
        assert rank_q([[0, 0], [0, 0]], 2) == 0
        assert rank_q([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 2) == 3
        a = F8.alpha
        e = [F8.zero, F8.one, F8.one]
        assert expand(e) == [[0, 1, 1], [0, 0, 0], [0, 0, 0]]
        assert rank_q(expand(e), 2) == 1 == rank_q_vector(e)

    @pytest.mark.parametrize("q", [2, 3, 5])
    def test_against_minor_rank(self, q, rng):
        for _ in range(60):
            r, c = rng.integers(1, 5, size=2)
            M = rng.integers(0, q, size=(r, c)).tolist()
            assert rank_q(M, q) == minor_rank(M, lambda x: x % q != 0)

    def test_fqm_rank_against_minor_rank(self, rng):
        F = FieldCtx(2, 3)
        for _ in range(40):
            r, c = rng.integers(1, 4, size=2)
            M = [[rand_elem(F, rng) for _ in range(c)] for _ in range(r)]
            assert rank_qm(M) == minor_rank(M, bool)


class TestExpand:
    def test_examples(self, F8):
        a = F8.alpha
        assert expand([F8.zero] * 3) == [[0] * 3 for _ in range(3)]
        assert expand([F8.one, a, a**2]) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        cols = list(zip(*expand([a**3, F8.one, a**3])))
        assert cols == [(1, 1, 0), (1, 0, 0), (1, 1, 0)]

    def test_contract_inverts(self, rng):
        F = FieldCtx(3, 3)
        v = [rand_elem(F, rng) for _ in range(5)]
        assert contract(expand(v), F) == v


class TestRankDistance:
    def test_examples(self, F8, r15):
        a = F8.alpha
        assert rank_distance(r15, r15) == 0
        assert rank_distance([a**3, F8.one, a**3], r15) == 1

    def test_metric(self, rng):
        F = FieldCtx(2, 4)
        for _ in range(200):
            x, y, z = ([rand_elem(F, rng) for _ in range(4)] for _ in range(3))
            assert rank_distance(x, y) == rank_distance(y, x)
            assert rank_distance(x, z) <= rank_distance(x, y) + rank_distance(y, z)
            assert (rank_distance(x, y) == 0) == (x == y)

    def test_length_mismatch(self, F8):
        with pytest.raises(LengthMismatchError):
            rank_distance([F8.one], [F8.one, F8.one])


class TestMoore:
    def test_generator_of_example(self, F8):
        a = F8.alpha
        g = [F8.one, a, a**2]
        assert moore_matrix(g, 2) == [[F8.one, a, a**2], [F8.one, a**2, a**4]]
        assert moore_matrix(g, 1) == [g]
        assert det(moore_matrix(g, 3)) != 0

    def test_invertible_iff_independent(self, rng):
        F = FieldCtx(2, 4)
        seen = set()
        for _ in range(300):
            n = int(rng.integers(1, 5))
            g = [rand_elem(F, rng) for _ in range(n)]
            indep = rank_q(expand(g), 2) == n
            seen.add(indep)
            assert (det(moore_matrix(g, n)) != 0) == indep == is_independent(g)
        assert seen == {True, False}


class TestSolve:
    def test_identity(self, F8, rng):
        I = [[F8.one if i == j else F8.zero for j in range(3)] for i in range(3)]
        b = [rand_elem(F8, rng) for _ in range(3)]
        assert solve(I, b) == b

    def test_residual(self, rng):
        F = FieldCtx(3, 3)
        for _ in range(100):
            A = [[rand_elem(F, rng) for _ in range(4)] for _ in range(4)]
            b = [rand_elem(F, rng) for _ in range(4)]
            if rank_qm(A) < 4:
                with pytest.raises(SingularMatrixError):
                    solve(A, b)
                continue
            x = solve(A, b)
            assert [sum((aij * xj for aij, xj in zip(row, x)), F.zero) for row in A] == b

    def test_det_matches_cofactor_expansion(self, rng):
        F = FieldCtx(5, 2)
        for _ in range(30):
            A = [[rand_elem(F, rng) for _ in range(3)] for _ in range(3)]
            c = (A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
                 - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
                 + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]))
            assert det(A) == c


def test_nullspace(rng):
    for q in (2, 3, 5):
        for _ in range(50):
            M = rng.integers(0, q, size=(3, 5)).tolist()
            N = nullspace_q(M, q)
            assert len(N) == 5 - rank_q(M, q)
            for v in N:
                assert all(sum(a * b for a, b in zip(row, v)) % q == 0 for row in M)
            if N:
                assert rank_q(N, q) == len(N)


def test_span_basis(F8):
    a = F8.alpha
    v = [F8.one, a, a + 1, F8.zero, a**2]
    assert span_basis(v) == [F8.one, a, a**2]
