from collections import Counter
from fractions import Fraction
from itertools import permutations, product
from math import factorial

import pytest

from alphadet.exactalg import AlphaPoly
from alphadet.symgrp import (SizeGuardError, as_partition, block_subgroups, cells, character, check_guard,
                             class_size, compose, conjugate, content_poly, cycle_type, frobenius_specialization_check,
                             from_one_line, identity_perm, inverse, is_hook, kostka, nu, partitions, sign,
                             standard_tableau_count, to_one_line, weyl_dimension, zonal_spherical)


def ssyt_count(lam, mu):
    """Semistandard tableaux of shape lam and content mu by brute force."""
    boxes = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    letters = [k + 1 for k, m in enumerate(mu) for _ in range(m)]
    seen = set()
    for filling in set(permutations(letters)):
        t = dict(zip(boxes, filling))
        rows_ok = all(t[i, j] <= t[i, j + 1] for i, j in boxes if (i, j + 1) in t)
        cols_ok = all(t[i, j] < t[i + 1, j] for i, j in boxes if (i + 1, j) in t)
        if rows_ok and cols_ok:
            seen.add(filling)
    return len(seen)


def test_partitions_order_and_count():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [len(list(partitions(m))) for m in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert list(partitions(6, max_length=2)) == [(6,), (5, 1), (4, 2), (3, 3)]


def test_partition_helpers():
    assert as_partition([3, 0, 1, 0]) == (3, 1)
    with pytest.raises(ValueError):
        as_partition([1, 2])
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert list(cells((2, 1))) == [(1, 1), (1, 2), (2, 1)]
    assert is_hook((5, 1, 1)) and not is_hook((3, 2))


@pytest.mark.parametrize("sigma,expected", [((0, 1, 2), 0), ((1, 0, 2), 1), ((1, 2, 0), 2)])
def test_nu(sigma, expected):
    assert nu(sigma) == expected


def test_permutation_algebra():
    g, h = (1, 2, 0, 3), (3, 0, 1, 2)
    assert compose(g, h) == tuple(g[h[i]] for i in range(4))
    assert compose(g, inverse(g)) == identity_perm(4)
    assert sign(g) == 1 and sign((1, 0, 2)) == -1
    assert to_one_line(from_one_line([2, 3, 1])) == [2, 3, 1]
    assert cycle_type(h) == (4,)


def test_class_sizes_sum_to_factorial():
    for m in range(1, 8):
        assert sum(class_size(mu) for mu in partitions(m)) == factorial(m)


@pytest.mark.parametrize("lam,f", [((5,), 1), ((2, 1), 2), ((1, 1, 1, 1), 1), ((3, 2), 5), ((3, 2, 1), 16)])
def test_standard_tableau_count(lam, f):
    assert standard_tableau_count(lam) == f


def test_sum_of_squares_of_dimensions():
    for m in range(1, 9):
        assert sum(standard_tableau_count(lam) ** 2 for lam in partitions(m)) == factorial(m)


def test_kostka_examples():
    for n in range(1, 5):
        for l in range(1, 4):
            assert kostka((n * l,), (l,) * n) == 1
            if n * l > 1 and n > 1:
                assert kostka((n * l - 1, 1), (l,) * n) == n - 1
    assert kostka((4, 2), (2, 2, 2)) == 3
    with pytest.raises(ValueError, match="weight mismatch"):
        kostka((3,), (2, 2))


def test_kostka_against_brute_force():
    for m in range(1, 7):
        for lam in partitions(m):
            for mu in partitions(m):
                assert kostka(lam, mu) == ssyt_count(lam, mu), (lam, mu)


def test_kostka_is_symmetric_in_content_order():
    assert kostka((3, 2, 1), (1, 2, 3)) == kostka((3, 2, 1), (3, 2, 1))


def test_content_poly():
    a = AlphaPoly.linear
    assert content_poly((4,)) == a(1, 1) * a(1, 2) * a(1, 3)
    assert content_poly((2, 1)) == a(1, 1) * a(1, -1)
    assert content_poly((1,)) == AlphaPoly.constant(1)
    assert content_poly((2, 2)) == a(1, 1) * a(1, -1)


def test_weyl_dimension():
    assert weyl_dimension((1,), 3) == 3
    assert weyl_dimension((2,), 3) == 6
    assert weyl_dimension((1, 1), 3) == 3
    assert weyl_dimension((2, 1), 3) == 8
    assert weyl_dimension((1, 1, 1, 1), 3) == 0


def brute_character_s3():
    # permutation representation on C^3 minus the trivial one
    table = {}
    for mu in partitions(3):
        g = next(p for p in permutations(range(3)) if cycle_type(p) == mu)
        fixed = sum(g[i] == i for i in range(3))
        table[mu] = fixed - 1
    return table


def test_character_table_s3():
    assert {mu: character((2, 1), mu) for mu in partitions(3)} == brute_character_s3()
    assert [character((3,), mu) for mu in partitions(3)] == [1, 1, 1]
    assert [character((1, 1, 1), mu) for mu in partitions(3)] == [1, -1, 1]


def test_character_dimension_and_orthogonality():
    for m in range(1, 8):
        lams = list(partitions(m))
        for lam in lams:
            assert character(lam, (1,) * m) == standard_tableau_count(lam)
        for a, b in product(lams, lams):
            inner = sum(class_size(mu) * character(a, mu) * character(b, mu) for mu in lams)
            assert inner == (factorial(m) if a == b else 0)


def test_character_errors():
    with pytest.raises(ValueError, match="size mismatch"):
        character((2, 1), (2,))


def test_frobenius_specialization():
    assert all(frobenius_specialization_check(n) for n in range(1, 8))
    with pytest.raises(SizeGuardError):
        frobenius_specialization_check(9)


def test_block_subgroups():
    sub = block_subgroups(2, 2)
    assert len(sub.K) == 4 and len(sub.H) == 4
    assert sub.degree == 4
    for h in sub.H:
        # H preserves the residue of every point mod l
        assert all(h[x] % 2 == x % 2 for x in range(4))
    for k in sub.K:
        assert all(k[x] // 2 == x // 2 for x in range(4))
    assert len(set(sub.theta[h] for h in sub.H)) == len(sub.H)


def test_zonal_spherical():
    sub = block_subgroups(2, 1)
    assert zonal_spherical((1, 1), (1, 0), sub) == -1
    assert zonal_spherical((2,), (1, 0), sub) == 1
    sub = block_subgroups(2, 2)
    for lam in partitions(4, max_length=2):
        # omega(e) is the multiplicity of the trivial K-module in lam
        assert zonal_spherical(lam, identity_perm(4), sub) == kostka(lam, (2, 2))
        # constant on double cosets
        values = Counter()
        for k in sub.K:
            values[zonal_spherical(lam, compose(k, (2, 1, 0, 3)), sub)] += 1
        assert len(values) == 1
    with pytest.raises(ValueError, match="size mismatch"):
        zonal_spherical((3,), identity_perm(4), sub)


def test_guard(monkeypatch):
    check_guard(10, "thing", default=100)
    with pytest.raises(SizeGuardError, match="size guard exceeded"):
        check_guard(1000, "thing", default=100)
    monkeypatch.setenv("ALPHADET_GUARD_MAX", "5000")
    check_guard(1000, "thing", default=100)
    with pytest.raises(SizeGuardError):
        check_guard(10**8, "thing")


def test_zonal_value_is_rational():
    sub = block_subgroups(2, 2)
    assert isinstance(zonal_spherical((3, 1), (2, 3, 0, 1), sub), Fraction)
