"""The polynomial algebra on n x n matrices with its gl_n action.

A :class:`MatPoly` is a sparse polynomial in the variables ``x_ij``.  Its
monomials are keyed by the exponent matrix flattened row-major, and the
coefficients are AlphaPolys.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Callable, Iterable, Mapping, Sequence

from .exactalg import ONE, ZERO, AlphaPoly, Scalar
from .symgrp import Partition, character, check_guard, cycle_type, nu, partitions

Exponent = tuple  # flattened n*n exponent matrix
ColMatrix = tuple  # tuple of n row tuples; every column sums to l


class MatPoly:
    """Sparse polynomial in the n^2 variables x_ij with AlphaPoly coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponent, AlphaPoly] | None = None):
        clean = {}
        for key, c in (terms or {}).items():
            c = AlphaPoly._lift(c)
            if len(key) != n * n:
                raise ValueError("exponent matrix has the wrong size")
            if not c.is_zero():
                clean[tuple(key)] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MatPoly is immutable")

    @classmethod
    def one(cls, n: int) -> MatPoly:
        return cls(n, {(0,) * (n * n): ONE})

    @classmethod
    def variable(cls, n: int, i: int, j: int) -> MatPoly:
        """``x_ij`` with 1-based indices."""
        key = [0] * (n * n)
        key[(i - 1) * n + (j - 1)] = 1
        return cls(n, {tuple(key): ONE})

    @classmethod
    def monomial(cls, exponent: Sequence[Sequence[int]], coeff=ONE) -> MatPoly:
        n = len(exponent)
        return cls(n, {flatten(exponent): AlphaPoly._lift(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, MatPoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: MatPoly) -> MatPoly:
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return MatPoly(self.n, out)

    def __neg__(self) -> MatPoly:
        return MatPoly(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: MatPoly) -> MatPoly:
        return self + (-other)

    def __mul__(self, other) -> MatPoly:
        if not isinstance(other, MatPoly):
            return MatPoly(self.n, {k: c * other for k, c in self.terms.items()})
        out: dict[Exponent, AlphaPoly] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                c = c1 * c2
                out[k] = out[k] + c if k in out else c
        return MatPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MatPoly:
        out = MatPoly.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def specialize(self, alpha0: Scalar) -> MatPoly:
        """Substitute a rational value for alpha; coefficients become constants."""
        return MatPoly(self.n, {k: AlphaPoly.constant(c(Fraction(alpha0))) for k, c in self.terms.items()})

    def coefficient(self, exponent) -> AlphaPoly:
        key = exponent if isinstance(exponent[0], int) else flatten(exponent)
        return self.terms.get(tuple(key), ZERO)

    def sorted_terms(self) -> list[tuple[Exponent, AlphaPoly]]:
        """Terms in graded lexicographic order of the flattened exponent."""
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    def to_json(self) -> list:
        n = self.n
        return [[unflatten(k, n), c.to_json()] for k, c in self.sorted_terms()]

    def __repr__(self) -> str:
        return f"MatPoly(n={self.n}, {len(self.terms)} terms)"


def flatten(mat: Sequence[Sequence[int]]) -> Exponent:
    return tuple(int(x) for row in mat for x in row)


def unflatten(key: Exponent, n: int) -> list[list[int]]:
    return [list(key[i * n:(i + 1) * n]) for i in range(n)]


def gl_action(p: int, q: int, f: MatPoly) -> MatPoly:
    """``E_pq . f = sum_k x_pk d f / d x_qk`` (1-based p, q)."""
    n = f.n
    if not (1 <= p <= n and 1 <= q <= n):
        raise IndexError("bad index")
    out: dict[Exponent, AlphaPoly] = {}
    p0, q0 = p - 1, q - 1
    for key, c in f.terms.items():
        for k in range(n):
            e = key[q0 * n + k]
            if e == 0:
                continue
            new = list(key)
            new[q0 * n + k] -= 1
            new[p0 * n + k] += 1
            new = tuple(new)
            term = c * e
            out[new] = out[new] + term if new in out else term
    return MatPoly(n, out)


# --- class functions and immanants ----------------------------------------


@dataclass(frozen=True, eq=False)
class ClassFunction:
    """A class function on S_m given by its values on cycle types.

    Values may be ints, Fractions or AlphaPolys.
    """

    m: int
    values: Mapping[Partition, object]

    def __post_init__(self):
        missing = [mu for mu in partitions(self.m) if mu not in self.values]
        if missing:
            raise ValueError(f"class function undefined on cycle types {missing}")
        frozen = tuple((mu, AlphaPoly._lift(self.values[mu])) for mu in partitions(self.m))
        object.__setattr__(self, "_key", frozen)

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassFunction) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __call__(self, sigma) -> AlphaPoly:
        return AlphaPoly._lift(self.values[cycle_type(sigma)])

    @classmethod
    def from_rule(cls, m: int, rule: Callable[[Partition], object]) -> ClassFunction:
        return cls(m, {mu: rule(mu) for mu in partitions(m)})

    @classmethod
    def alpha_nu(cls, m: int) -> ClassFunction:
        """``sigma -> alpha^nu(sigma)``"""
        return cls.from_rule(m, lambda mu: AlphaPoly.monomial(m - len(mu)))

    @classmethod
    def sign(cls, m: int) -> ClassFunction:
        return cls.from_rule(m, lambda mu: (-1) ** (m - len(mu)))

    @classmethod
    def trivial(cls, m: int) -> ClassFunction:
        return cls.from_rule(m, lambda mu: 1)

    @classmethod
    def delta_identity(cls, m: int) -> ClassFunction:
        return cls.from_rule(m, lambda mu: int(mu == (1,) * m))

    @classmethod
    def irreducible(cls, lam: Sequence[int]) -> ClassFunction:
        lam = tuple(lam)
        return cls.from_rule(sum(lam), lambda mu: character(lam, mu))


def phi_immanant(phi: ClassFunction) -> MatPoly:
    """``sum_sigma phi(sigma) x_{1 sigma(1)} ... x_{n sigma(n)}``"""
    n = phi.m
    out: dict[Exponent, AlphaPoly] = {}
    for sigma in permutations(range(n)):
        key = [0] * (n * n)
        for i in range(n):
            key[i * n + sigma[i]] += 1
        out[tuple(key)] = phi(sigma)
    return MatPoly(n, out)


def alpha_det(n: int) -> MatPoly:
    """``sum_sigma alpha^nu(sigma) x_{sigma(1) 1} ... x_{sigma(n) n}``"""
    return D_rows(tuple(range(1, n + 1)))


@lru_cache(maxsize=None)
def _D_rows_phi(rows: tuple, phi: ClassFunction | None) -> MatPoly:
    n = len(rows)
    out: dict[Exponent, AlphaPoly] = {}
    for sigma in permutations(range(n)):
        coeff = AlphaPoly.monomial(nu(sigma)) if phi is None else phi(sigma)
        if coeff.is_zero():
            continue
        key = [0] * (n * n)
        for j in range(n):
            key[(rows[sigma[j]] - 1) * n + j] += 1
        key = tuple(key)
        out[key] = out[key] + coeff if key in out else coeff
    return MatPoly(n, out)


def D_rows(k: Sequence[int]) -> MatPoly:
    """alpha-determinant of the matrix whose i-th row is row ``k[i]`` of X (1-based)."""
    k = tuple(int(x) for x in k)
    n = len(k)
    if any(not 1 <= x <= n for x in k):
        raise IndexError("bad index")
    return _D_rows_phi(k, None)


def _check_colmatrix(M: ColMatrix) -> tuple[int, int]:
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("not in M_{n,l}: not square")
    sums = {sum(M[i][j] for i in range(n)) for j in range(n)}
    if len(sums) != 1 or any(x < 0 for row in M for x in row):
        raise ValueError("not in M_{n,l}: column sums differ")
    return n, sums.pop()


def _unit_columns(M: ColMatrix) -> Iterable[tuple[int, ...]]:
    """Row choices ``(k_1, ..., k_n)`` (1-based) with ``M[k_j - 1][j] > 0`` for all j."""
    n = len(M)

    def rec(j: int, acc: list[int]):
        if j == n:
            yield tuple(acc)
            return
        for i in range(n):
            if M[i][j] > 0:
                acc.append(i + 1)
                yield from rec(j + 1, acc)
                acc.pop()

    return rec(0, [])


def _subtract_unit(M: ColMatrix, rows: tuple[int, ...]) -> ColMatrix:
    out = [list(r) for r in M]
    for j, k in enumerate(rows):
        out[k - 1][j] -= 1
    return tuple(tuple(r) for r in out)


@lru_cache(maxsize=None)
def _ordered_partition_sum(M: ColMatrix, phis: tuple) -> MatPoly:
    """Sum over ordered tuples (M_1, ..., M_l) of unit-column matrices adding
    to M of the product of D(M_i; phis[i]).

    The recursion peels off M_1 and memoises on the remainder, so every
    sub-matrix is expanded once.
    """
    n = len(M)
    if not phis:
        return MatPoly.one(n)
    total = MatPoly(n)
    head, tail = phis[0], phis[1:]
    for rows in _unit_columns(M):
        rest = _ordered_partition_sum(_subtract_unit(M, rows), tail)
        total = total + _D_rows_phi(rows, head) * rest
    return total


def partition_count(M: ColMatrix) -> int:
    """Number of ordered partitions of M: a product of per-column multinomials."""
    n = len(M)
    total = 1
    for j in range(n):
        col = [M[i][j] for i in range(n)]
        c = factorial(sum(col))
        for x in col:
            c //= factorial(x)
        total *= c
    return total


def _prefactor(M: ColMatrix, l: int) -> Fraction:
    mfact = 1
    for row in M:
        for x in row:
            mfact *= factorial(x)
    return Fraction(mfact, factorial(l) ** len(M))


def as_colmatrix(M) -> ColMatrix:
    return tuple(tuple(int(x) for x in row) for row in M)


def D_of(M) -> MatPoly:
    """``(M!/(lI_n)!) sum_{(M_1..M_l) => M} D(M_1) ... D(M_l)``."""
    M = as_colmatrix(M)
    n, l = _check_colmatrix(M)
    check_guard(partition_count(M), "partitions of M")
    return _ordered_partition_sum(M, (None,) * l) * _prefactor(M, l)


def D_of_phi(M, phis: Sequence[ClassFunction]) -> MatPoly:
    """As :func:`D_of` with the i-th factor's alpha^nu replaced by ``phis[i]``."""
    M = as_colmatrix(M)
    n, l = _check_colmatrix(M)
    if len(phis) != l:
        raise ValueError("need one class function per factor")
    if any(phi.m != n for phi in phis):
        raise ValueError("class functions must live on S_n")
    check_guard(partition_count(M), "partitions of M")
    return _ordered_partition_sum(M, tuple(phis)) * _prefactor(M, l)


def immanant(lam: Sequence[int]) -> MatPoly:
    """Classical immanant ``sum_sigma chi^lam(sigma) x_{1 sigma(1)} ... x_{n sigma(n)}``."""
    return phi_immanant(ClassFunction.irreducible(lam))
