"""Symmetric group combinatorics.

Partitions are plain tuples of positive ints in weakly decreasing order.
Permutations are tuples of 0-based images (``perm[i]`` is the image of
``i``); the 1-based one-line notation is only used for serialization.
Products compose right to left: ``compose(g, h)(x) == g[h[x]]``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator, Sequence

from .exactalg import ONE, ZERO, AlphaPoly

Partition = tuple  # of int
Permutation = tuple  # of int, 0-based images

DEFAULT_GUARD = 10**7


class SizeGuardError(ValueError):
    """An enumeration would exceed the configured size guard."""


def guard_limit(default: int = DEFAULT_GUARD) -> int:
    env = os.environ.get("ALPHADET_GUARD_MAX")
    return int(env) if env else default


def check_guard(size: int, what: str, default: int = DEFAULT_GUARD) -> None:
    if size > guard_limit(default):
        raise SizeGuardError(f"size guard exceeded: {what} has {size} elements")


# --- partitions ---------------------------------------------------------------


def partitions(m: int, max_length: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``m`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = m
    if m == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(m, max_part), 0, -1):
        rest_len = None if max_length is None else max_length - 1
        for rest in partitions(m - first, rest_len, first):
            yield (first,) + rest


def as_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not a partition: {parts}")
    return parts


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def cells(lam: Partition) -> Iterator[tuple[int, int]]:
    """Cells ``(i, j)`` with 1-based row and column indices."""
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield i, j


def is_hook(lam: Partition) -> bool:
    return len(lam) <= 1 or all(p == 1 for p in lam[1:])


def standard_tableau_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    lam = as_partition(lam)
    conj = conjugate(lam)
    hooks = prod(lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in cells(lam))
    return factorial(sum(lam)) // hooks


@lru_cache(maxsize=None)
def _kostka(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    # peel off the largest entry: its cells form a horizontal strip lam/nu
    last = mu[-1]
    total = 0
    for nu in _horizontal_strips_inside(lam, last):
        total += _kostka(nu, mu[:-1])
    return total


def _horizontal_strips_inside(lam: Partition, size: int) -> Iterator[Partition]:
    """Shapes nu contained in lam with lam/nu a horizontal strip of ``size`` boxes."""
    rows = len(lam)

    def rec(i: int, left: int, acc: list[int]):
        if i == rows:
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        nxt = lam[i + 1] if i + 1 < rows else 0
        for nu_i in range(lam[i], nxt - 1, -1):
            removed = lam[i] - nu_i
            if removed > left:
                break
            acc.append(nu_i)
            yield from rec(i + 1, left - removed, acc)
            acc.pop()

    yield from rec(0, size, [])


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``.

    ``mu`` need not be weakly decreasing (zero entries are allowed).  The
    count is built up by removing one horizontal strip per letter, largest
    letter first.
    """
    lam = as_partition(lam)
    mu = tuple(int(m) for m in mu)
    if sum(lam) != sum(mu):
        raise ValueError("weight mismatch")
    return _kostka(lam, tuple(m for m in mu if m))


def content_poly(lam: Sequence[int]) -> AlphaPoly:
    """Modified content polynomial: product of ``1 + (j - i) alpha`` over the cells."""
    out = ONE
    for i, j in cells(as_partition(lam)):
        out = out * AlphaPoly.linear(1, j - i)
    return out


def weyl_dimension(lam: Sequence[int], n: int) -> int:
    """Dimension of the irreducible gl_n module with highest weight ``lam``."""
    lam = tuple(lam) + (0,) * (n - len(lam))
    if len(lam) > n:
        return 0
    num = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            num *= Fraction(lam[i] - lam[j] + j - i, j - i)
    return int(num)


# --- permutations -------------------------------------------------------------


def identity_perm(m: int) -> Permutation:
    return tuple(range(m))


def compose(g: Permutation, h: Permutation) -> Permutation:
    return tuple(g[x] for x in h)


def inverse(g: Permutation) -> Permutation:
    out = [0] * len(g)
    for i, gi in enumerate(g):
        out[gi] = i
    return tuple(out)


def cycle_type(g: Permutation) -> Partition:
    seen = [False] * len(g)
    lengths = []
    for start in range(len(g)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = g[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def nu(sigma: Permutation) -> int:
    """Ground-set size minus the number of cycles (fixed points included)."""
    return len(sigma) - len(cycle_type(sigma))


def sign(sigma: Permutation) -> int:
    return -1 if nu(sigma) % 2 else 1


def from_one_line(images: Sequence[int]) -> Permutation:
    perm = tuple(int(i) - 1 for i in images)
    if sorted(perm) != list(range(len(perm))):
        raise ValueError("not a permutation")
    return perm


def to_one_line(perm: Permutation) -> list[int]:
    return [i + 1 for i in perm]


def class_size(mu: Partition) -> int:
    """Number of permutations with cycle type ``mu``."""
    m = sum(mu)
    z = 1
    for k in set(mu):
        c = mu.count(k)
        z *= k**c * factorial(c)
    return factorial(m) // z


# --- characters ---------------------------------------------------------------


def _beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    lam = lam + (0,) * (length - len(lam))
    return tuple(lam[i] + length - 1 - i for i in range(length))


def _from_beta(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    k = len(b)
    return tuple(p for p in (b[i] - (k - 1 - i) for i in range(k)) if p)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    r = mu[0]
    rest = mu[1:]
    length = len(lam) + r
    beta = _beta_set(lam, length)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        # removing a rim hook of length r: sign is (-1)^(beads jumped over)
        height = sum(1 for c in beta if target < c < b)
        new = [c for c in beta if c != b] + [target]
        total += (-1) ** height * _mn(_from_beta(new), rest)
    return total


def character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Irreducible character chi^lam on the class of cycle type ``mu``
    (Murnaghan-Nakayama rule, memoised)."""
    lam = as_partition(lam)
    mu = tuple(sorted((int(x) for x in mu if x), reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    return _mn(lam, mu)


def frobenius_specialization_check(n: int) -> bool:
    """Check ``alpha^nu(sigma) = sum_lam (f^lam / n!) f_lam(alpha) chi^lam(sigma)``
    on every conjugacy class of S_n."""
    if n > 8:
        raise SizeGuardError("size guard exceeded: frobenius check needs n <= 8")
    lams = list(partitions(n))
    weights = {lam: content_poly(lam) * Fraction(standard_tableau_count(lam), factorial(n)) for lam in lams}
    for mu in partitions(n):
        lhs = AlphaPoly.monomial(n - len(mu))
        rhs = ZERO
        for lam in lams:
            rhs = rhs + weights[lam] * character(lam, mu)
        if lhs != rhs:
            return False
    return True


# --- the subgroups K (rows) and H (columns) of S_{nl} ------------------------


@dataclass(frozen=True)
class BlockSubgroups:
    """Row group K and column group H of the tableau of shape (l^n) filled
    row by row with 1..nl.

    K permutes within each block ``{(x-1)l+1, ..., xl}``; H permutes the
    positions congruent mod l.  ``theta[h]`` gives ``(sigma_1, ..., sigma_l)``
    in ``(S_n)^l`` with ``h((x-1)l+i) = (sigma_i(x)-1)l+i`` (1-based).
    """

    n: int
    l: int
    K: tuple
    H: tuple
    theta: dict

    @property
    def degree(self) -> int:
        return self.n * self.l


def block_subgroups(n: int, l: int) -> BlockSubgroups:
    if n < 1 or l < 1:
        raise ValueError("n and l must be positive")
    check_guard(factorial(l) ** n, "K")
    check_guard(factorial(n) ** l, "H")
    m = n * l
    sl = list(permutations(range(l)))
    K = []
    for blocks in product(sl, repeat=n):
        g = [0] * m
        for b, s in enumerate(blocks):
            for j in range(l):
                g[b * l + j] = b * l + s[j]
        K.append(tuple(g))
    sn = list(permutations(range(n)))
    H = []
    theta = {}
    for sigmas in product(sn, repeat=l):
        g = [0] * m
        # 0-based: position x*l + i (x in [0,n), i in [0,l)) goes to sigma_i(x)*l + i
        for i, s in enumerate(sigmas):
            for x in range(n):
                g[x * l + i] = s[x] * l + i
        h = tuple(g)
        H.append(h)
        theta[h] = sigmas
    return BlockSubgroups(n, l, tuple(K), tuple(H), theta)


def zonal_spherical(lam: Sequence[int], g: Permutation, sub: BlockSubgroups) -> Fraction:
    """``omega^lam(g) = |K|^-1 sum_{k in K} chi^lam(k g)``."""
    lam = as_partition(lam)
    if sum(lam) != sub.degree or len(g) != sub.degree:
        raise ValueError("size mismatch")
    counts: dict[Partition, int] = {}
    for k in sub.K:
        ct = cycle_type(compose(k, g))
        counts[ct] = counts.get(ct, 0) + 1
    total = sum(c * character(lam, ct) for ct, c in counts.items())
    return Fraction(total, len(sub.K))
