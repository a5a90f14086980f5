import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alphadet.exactalg import ALPHA, ONE, AlphaPoly
from alphadet.matalg import (ClassFunction, D_of, D_of_phi, D_rows, MatPoly, alpha_det, gl_action, immanant,
                             partition_count, phi_immanant)
from alphadet.symgrp import character, cycle_type, sign
from alphadet.tensormod import enumerate_basis


def x(i, j, n):
    return MatPoly.variable(n, i, j)


def permanent_sum(n):
    out = MatPoly(n)
    for sigma in permutations(range(n)):
        term = MatPoly.one(n)
        for i in range(n):
            term = term * x(i + 1, sigma[i] + 1, n)
        out = out + term
    return out


def cofactor_det(n, rows=None, cols=None):
    # Laplace expansion along the first remaining row
    rows = list(range(1, n + 1)) if rows is None else rows
    cols = list(range(1, n + 1)) if cols is None else cols
    if not rows:
        return MatPoly.one(n)
    out = MatPoly(n)
    r, rest = rows[0], rows[1:]
    for idx, c in enumerate(cols):
        minor = cofactor_det(n, rest, cols[:idx] + cols[idx + 1:])
        term = x(r, c, n) * minor
        out = out + term * (-1 if idx % 2 else 1)
    return out


def random_matpoly(rng, n, terms=4, degree=3):
    out = MatPoly(n)
    for _ in range(terms):
        mono = [[0] * n for _ in range(n)]
        for _ in range(rng.randint(0, degree)):
            mono[rng.randrange(n)][rng.randrange(n)] += 1
        out = out + MatPoly.monomial(mono, AlphaPoly((rng.randint(-3, 3), rng.randint(-3, 3))))
    return out


class TestMatPoly:
    def test_variable_and_product(self):
        f = x(1, 1, 2) * x(2, 2, 2)
        assert f.coefficient([[1, 0], [0, 1]]) == ONE
        assert (f - f).is_zero()

    def test_specialize(self):
        f = MatPoly.monomial([[1, 0], [0, 1]], AlphaPoly.linear(1, 1))
        assert f.specialize(2).coefficient([[1, 0], [0, 1]]) == AlphaPoly.constant(3)

    def test_sorted_terms_deterministic(self):
        f = x(1, 2, 2) + x(1, 1, 2) * x(2, 2, 2)
        assert [k for k, _ in f.sorted_terms()] == [k for k, _ in (x(1, 1, 2) * x(2, 2, 2) + x(1, 2, 2)).sorted_terms()]


class TestGlAction:
    def test_diagonal_on_first_row(self):
        for l in range(1, 4):
            f = x(1, 1, 2) ** l * x(1, 2, 2) ** l
            assert gl_action(1, 1, f) == f * (2 * l)

    def test_constant_killed(self):
        assert gl_action(1, 2, MatPoly.one(2)).is_zero()

    def test_single_variable(self):
        assert gl_action(2, 1, x(1, 1, 2)) == x(2, 1, 2)

    def test_bad_index(self):
        with pytest.raises(IndexError, match="bad index"):
            gl_action(3, 1, x(1, 1, 2))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6), st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.integers(1, 3))
    def test_commutator(self, seed, p, q, r, s):
        # [E_pq, E_rs] = delta_qr E_ps - delta_sp E_rq
        f = random_matpoly(random.Random(seed), 3)
        lhs = gl_action(p, q, gl_action(r, s, f)) - gl_action(r, s, gl_action(p, q, f))
        rhs = MatPoly(3)
        if q == r:
            rhs = rhs + gl_action(p, s, f)
        if s == p:
            rhs = rhs - gl_action(r, q, f)
        assert lhs == rhs


class TestAlphaDeterminant:
    def test_n2(self):
        expected = x(1, 1, 2) * x(2, 2, 2) + x(2, 1, 2) * x(1, 2, 2) * ALPHA
        assert alpha_det(2) == expected

    def test_minus_one_is_determinant(self):
        for n in range(1, 4):
            assert alpha_det(n).specialize(-1) == cofactor_det(n)

    def test_one_is_permanent(self):
        for n in range(1, 4):
            assert alpha_det(n).specialize(1) == permanent_sum(n)

    def test_zero_is_diagonal(self):
        diag = MatPoly.one(3)
        for i in range(1, 4):
            diag = diag * x(i, i, 3)
        assert alpha_det(3).specialize(0) == diag


class TestImmanants:
    def test_sign_and_trivial(self):
        assert phi_immanant(ClassFunction.sign(3)) == cofactor_det(3)
        assert phi_immanant(ClassFunction.trivial(3)) == permanent_sum(3)

    def test_alpha_nu_is_transpose_form(self):
        # alpha^nu is a class function, so both index conventions agree
        for n in range(1, 4):
            assert phi_immanant(ClassFunction.alpha_nu(n)) == alpha_det(n)

    def test_irreducible_immanant_direct(self):
        n = 3
        for lam in [(3,), (2, 1), (1, 1, 1)]:
            direct = MatPoly(n)
            for sigma in permutations(range(n)):
                term = MatPoly.one(n) * character(lam, cycle_type(sigma))
                for i in range(n):
                    term = term * x(i + 1, sigma[i] + 1, n)
                direct = direct + term
            assert immanant(lam) == direct

    def test_class_function_values(self):
        sgn = ClassFunction.sign(3)
        assert sgn((1, 0, 2)) == AlphaPoly.constant(-1)
        assert ClassFunction.delta_identity(3)((0, 1, 2)) == ONE
        assert ClassFunction.delta_identity(3)((1, 2, 0)).is_zero()
        assert ClassFunction.sign(3) == ClassFunction.from_rule(3, lambda mu: sign(_perm_of_type(mu)))


def _perm_of_type(mu):
    out, start = [], 0
    for part in mu:
        out += [start + (k + 1) % part for k in range(part)]
        start += part
    return tuple(out)


class TestD:
    def test_D_rows_examples(self):
        assert D_rows((1, 1)) == x(1, 1, 2) * x(1, 2, 2) * AlphaPoly.linear(1, 1)
        assert D_rows((2, 1)) == x(1, 1, 2) * x(2, 2, 2) * ALPHA + x(2, 1, 2) * x(1, 2, 2)
        assert D_rows((1, 2, 3)) == alpha_det(3)

    def test_D_of_identity_power(self):
        for n, l in [(2, 1), (2, 2), (2, 3), (3, 2)]:
            M = [[l if i == j else 0 for j in range(n)] for i in range(n)]
            assert D_of(M) == alpha_det(n) ** l

    def test_D_of_at_zero_is_monomial(self):
        for n, l in [(2, 2), (3, 2), (2, 3)]:
            for M in enumerate_basis(n, l):
                assert D_of(M).specialize(0) == MatPoly.monomial(M)

    def test_D_of_homogeneous_of_row_weight(self):
        for M in enumerate_basis(3, 2):
            for key, _ in D_of(M).sorted_terms():
                rows = [sum(key[i * 3:(i + 1) * 3]) for i in range(3)]
                assert rows == [sum(r) for r in M]

    def test_D_of_rejects_bad_column_sums(self):
        with pytest.raises(ValueError, match="not in M_"):
            D_of([[1, 0], [0, 2]])
        with pytest.raises(ValueError, match="not in M_"):
            D_of([[2, -1], [0, 3]])

    def test_partition_count(self):
        assert partition_count([[2, 0], [0, 2]]) == 1
        assert partition_count([[1, 1], [1, 1]]) == 4

    def test_D_of_phi_delta_identity(self):
        for n, l in [(2, 2), (3, 2)]:
            M = [[l if i == j else 0 for j in range(n)] for i in range(n)]
            diag = MatPoly.one(n)
            for i in range(1, n + 1):
                diag = diag * x(i, i, n)
            assert D_of_phi(M, [ClassFunction.delta_identity(n)] * l) == diag ** l

    def test_D_of_phi_alpha_nu_is_D_of(self):
        for M in enumerate_basis(2, 2):
            assert D_of_phi(M, [ClassFunction.alpha_nu(2)] * 2) == D_of(M)

    def test_D_of_phi_l1_is_immanant(self):
        for lam in [(3,), (2, 1), (1, 1, 1)]:
            M = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
            assert D_of_phi(M, [ClassFunction.irreducible(lam)]) == immanant(lam)

    def test_D_of_phi_errors(self):
        with pytest.raises(ValueError):
            D_of_phi([[2, 0], [0, 2]], [ClassFunction.sign(2)])
        with pytest.raises(ValueError):
            D_of_phi([[1, 0], [0, 1]], [ClassFunction.sign(3)])

    def test_worked_decompositions(self):
        assert D_of([[2, 1], [0, 1]]) == D_rows((1, 1)) * D_rows((1, 2))
        expected = (D_rows((1, 1)) * D_rows((1, 2)) * D_rows((2, 2)) * 2
                    + D_rows((1, 2)) ** 2 * D_rows((2, 1))) * Fraction(1, 3)
        assert D_of([[2, 1], [1, 2]]) == expected

    def test_worked_action(self):
        M = [[2, 1], [1, 2]]
        assert gl_action(1, 1, D_of(M)) == D_of(M) * 3
        assert gl_action(1, 2, D_of(M)) == D_of([[3, 1], [0, 2]]) + D_of([[2, 2], [1, 1]]) * 2
        assert gl_action(2, 1, D_of(M)) == D_of([[1, 1], [2, 2]]) * 2 + D_of([[2, 0], [1, 3]])
        assert gl_action(2, 2, D_of(M)) == D_of(M) * 3
