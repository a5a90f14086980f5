"""Trace polynomials of transition matrices through zonal spherical functions.

The trace of F^lam_{n,l} equals ``sum_{h in H} alpha^nu(h) omega^lam(h)``,
where omega^lam is the zonal spherical function of lam relative to the row
group K = (S_l)^n and H is the column group.  This needs characters only, so
it is an independent route to the same numbers the tensor module produces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactalg import ZERO, AlphaPoly, BivarPoly, char_poly
from .symgrp import (BlockSubgroups, as_partition, block_subgroups, compose, content_poly, cycle_type,
                     is_hook, kostka, nu, partitions, standard_tableau_count, zonal_spherical)
from .tensormod import transition_matrix


@lru_cache(maxsize=None)
def _subgroups(n: int, l: int) -> BlockSubgroups:
    return block_subgroups(n, l)


def double_coset_key(g, n: int, l: int) -> tuple:
    """Invariant of the double coset K g K: entry (a, b) counts the points of
    block b sent into block a."""
    counts = [[0] * n for _ in range(n)]
    for x, gx in enumerate(g):
        counts[gx // l][x // l] += 1
    return tuple(map(tuple, counts))


def _sum_over_H(n: int, l: int, value) -> AlphaPoly:
    """``sum_{h in H} alpha^nu(h) value(h)`` with value cached per double coset."""
    sub = _subgroups(n, l)
    cache: dict = {}
    coeffs: dict[int, Fraction] = {}
    for h in sub.H:
        key = double_coset_key(h, n, l)
        if key not in cache:
            cache[key] = value(h, sub)
        w = cache[key]
        if w:
            k = nu(h)
            coeffs[k] = coeffs.get(k, Fraction(0)) + w
    if not coeffs:
        return ZERO
    return AlphaPoly(coeffs.get(k, 0) for k in range(max(coeffs) + 1))


def gcp(n: int, l: int, lam) -> AlphaPoly:
    """``sum_{h in H} alpha^nu(h) omega^lam(h)``, the trace of F^lam_{n,l}."""
    lam = as_partition(lam)
    if sum(lam) != n * l:
        raise ValueError("size mismatch")
    return _sum_over_H(n, l, lambda h, sub: zonal_spherical(lam, h, sub))


def full_trace(n: int, l: int) -> AlphaPoly:
    """Trace of e Phi e on (C^n)^{(x) nl}: ``sum_h alpha^nu(h) |K|^-1 sum_k n^cyc(kh)``."""
    def value(h, sub):
        total = sum(n ** len(cycle_type(compose(k, h))) for k in sub.K)
        return Fraction(total, len(sub.K))
    return _sum_over_H(n, l, value)


@dataclass
class TraceReport:
    n: int
    l: int
    lam: tuple
    gcp: AlphaPoly
    trace_of_F: AlphaPoly

    @property
    def match(self) -> bool:
        return self.gcp == self.trace_of_F

    def to_json(self) -> dict:
        return {"n": self.n, "l": self.l, "lambda": list(self.lam), "gcp": self.gcp.to_json(),
                "trace_of_F": self.trace_of_F.to_json(), "match": self.match}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def trace_crosscheck(n: int, l: int, lam) -> TraceReport:
    lam = as_partition(lam)
    F = transition_matrix(lam, n, l)
    return TraceReport(n, l, lam, gcp(n, l, lam), F.trace())


def hook_scalar_check(n: int, l: int, r: int) -> bool:
    """For lam = (nl - r, 1^r): is char_poly(F^lam) equal to (t - gcp/K)^K?"""
    if not 0 <= r < n:
        raise ValueError("need 0 <= r < n")
    lam = (n * l - r,) + (1,) * r
    assert is_hook(lam)
    d = kostka(lam, (l,) * n)
    scalar = gcp(n, l, lam) / d
    target = BivarPoly.linear_root(scalar)
    expected = BivarPoly([AlphaPoly.constant(1)])
    for _ in range(d):
        expected = expected * target
    return char_poly(transition_matrix(lam, n, l)) == expected


def l1_fourier_check(n: int) -> bool:
    """gcp(n, 1, lam) == f^lam * f_lam(alpha) for every lam of n."""
    if n > 6:
        raise ValueError("l1 check supports n <= 6")
    return all(gcp(n, 1, lam) == content_poly(lam) * standard_tableau_count(lam)
               for lam in partitions(n))


def standard_hook_scalar(n: int, l: int) -> AlphaPoly:
    """The scalar of F^{(nl-1,1)}: (1-alpha)(1+(n-1)alpha)^(l-1) prod_{j<=n-2} (1+j alpha)^l."""
    out = AlphaPoly.linear(1, -1) * AlphaPoly.linear(1, n - 1) ** (l - 1)
    for j in range(1, n - 1):
        out = out * AlphaPoly.linear(1, j) ** l
    return out
