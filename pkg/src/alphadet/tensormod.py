"""The tensor module (Sym^l C^n)^{(x) n} and transition matrices.

Basis vectors ``e^M`` are indexed by column matrices: n x n nonnegative
integer matrices (tuples of row tuples) whose columns all sum to l.  Column
j records the exponents of e_1, ..., e_n in the j-th tensor factor, so the
gl_n weight of ``e^M`` is the vector of row sums.

Tensor vectors are plain dicts ``{ColMatrix: coefficient}`` without zero
entries; coefficients are Fractions (or AlphaPolys for alpha-dependent
vectors).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb
from typing import Callable, Hashable, Mapping, Sequence

from .exactalg import (ZERO, AlphaPoly, PolyMatrix, as_rational, critical_alphas,
                       format_rational, generic_rank, nullspace, rank_at)
from .matalg import ColMatrix, D_of, MatPoly, flatten, as_colmatrix
from .symgrp import as_partition, check_guard, kostka, partitions

TensorVector = dict


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (HWV count, zero residual, ...)."""


# --- basis and action ----------------------------------------------------------


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographically decreasing."""
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def basis_size(n: int, l: int) -> int:
    return comb(n + l - 1, l) ** n


def enumerate_basis(n: int, l: int) -> list[ColMatrix]:
    """All of M_{n,l}, sorted lexicographically on the row tuples."""
    check_guard(basis_size(n, l), "M_{n,l}", default=10**6)
    cols = compositions(l, n)
    out = []
    for choice in product(cols, repeat=n):
        out.append(tuple(tuple(choice[j][i] for j in range(n)) for i in range(n)))
    out.sort()
    return out


def weight(M: ColMatrix) -> tuple[int, ...]:
    return tuple(sum(row) for row in M)


def _shift(M: ColMatrix, p: int, q: int, k: int) -> ColMatrix:
    """``M + R^{pq}_k`` (0-based p, q, k)."""
    rows = [list(r) for r in M]
    rows[p][k] += 1
    rows[q][k] -= 1
    return tuple(tuple(r) for r in rows)


def _add(out: dict, key, c) -> None:
    if key in out:
        s = out[key] + c
        if s:
            out[key] = s
        else:
            del out[key]
    elif c:
        out[key] = c


def tensor_E_action(p: int, q: int, v: Mapping[ColMatrix, object]) -> TensorVector:
    """``E_pq . e^M = sum_k m_qk e^{M + R^{pq}_k}`` extended linearly (1-based p, q)."""
    out: dict = {}
    for M, c in v.items():
        n = len(M)
        if not (1 <= p <= n and 1 <= q <= n):
            raise IndexError("bad index")
        for k in range(n):
            m = M[q - 1][k]
            if m:
                _add(out, _shift(M, p - 1, q - 1, k), c * m)
    return out


def basis_vector(M) -> TensorVector:
    return {as_colmatrix(M): Fraction(1)}


class _Echelon:
    """Incrementally maintained row-reduced basis of sparse rational vectors."""

    def __init__(self):
        self.rows: dict[Hashable, dict] = {}  # pivot key -> row with pivot entry 1

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        for piv, row in self.rows.items():
            c = v.get(piv)
            if c:
                for k, x in row.items():
                    _add(v, k, -c * x)
        return v

    def insert(self, v: dict) -> dict | None:
        """Add ``v`` to the span; return the reduced new row or None if dependent."""
        v = self.reduce(v)
        if not v:
            return None
        piv = min(v)
        inv = 1 / v[piv]
        v = {k: x * inv for k, x in v.items()}
        for key, row in self.rows.items():
            c = row.get(piv)
            if c:
                for k, x in v.items():
                    _add(row, k, -c * x)
        self.rows[piv] = v
        return v

    def __len__(self) -> int:
        return len(self.rows)


def cyclic_span_dimension(n: int, start: TensorVector) -> int:
    """Dimension of U(gl_n) . start, by closing the span under every E_pq."""
    ech = _Echelon()
    queue = [start]
    while queue:
        v = queue.pop()
        new = ech.insert(v)
        if new is None:
            continue
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                if p != q:
                    w = tensor_E_action(p, q, new)
                    if w:
                        queue.append(w)
    return len(ech)


def identity_colmatrix(n: int, l: int) -> ColMatrix:
    return tuple(tuple(l if i == j else 0 for j in range(n)) for i in range(n))


def cyclicity_check(n: int, l: int) -> bool:
    """True iff e^{l I_n} generates the whole tensor module."""
    total = basis_size(n, l)
    check_guard(total, "M_{n,l}", default=10**6)
    return cyclic_span_dimension(n, basis_vector(identity_colmatrix(n, l))) == total


# --- highest weight vectors ------------------------------------------------


def _pad(lam: Sequence[int], n: int) -> tuple[int, ...]:
    lam = tuple(lam)
    if len(lam) > n:
        raise ValueError("partition longer than n")
    return lam + (0,) * (n - len(lam))


def weight_space(lam: Sequence[int], n: int, l: int, order: Sequence[ColMatrix] | None = None) -> list[ColMatrix]:
    target = _pad(lam, n)
    basis = order if order is not None else enumerate_basis(n, l)
    return [M for M in basis if weight(M) == target]


def highest_weight_kernel(space: Sequence[Hashable], n: int,
                          act: Callable[[int, int, dict], dict]) -> list[dict]:
    """Kernel of all raising operators E_{i,i+1} on the span of ``space``.

    Returns sparse vectors forming a reduced echelon basis with respect to
    the order of ``space``.
    """
    equations: dict[Hashable, list[Fraction]] = {}
    for col, b in enumerate(space):
        for i in range(1, n):
            for target, c in act(i, i + 1, {b: Fraction(1)}).items():
                row = equations.setdefault((i, target), [Fraction(0)] * len(space))
                row[col] += c
    kernel = nullspace(list(equations.values()), len(space))
    return [{space[j]: x for j, x in enumerate(vec) if x} for vec in kernel]


def highest_weight_vectors(lam: Sequence[int], n: int, l: int,
                           order: Sequence[ColMatrix] | None = None) -> list[TensorVector]:
    """Basis of the highest weight vectors of weight ``lam``.

    The number of vectors is checked against the Kostka number K_{lam,(l^n)}.
    """
    lam = as_partition(lam)
    if sum(lam) != n * l:
        raise ValueError("weight mismatch")
    space = weight_space(lam, n, l, order)
    vecs = highest_weight_kernel(space, n, tensor_E_action)
    expected = kostka(lam, (l,) * n)
    if len(vecs) != expected:
        raise ConsistencyError(f"found {len(vecs)} highest weight vectors for {lam}, expected {expected}")
    return vecs


# --- the intertwiner and transition matrices -------------------------------


def _size(v: Mapping[ColMatrix, object], n: int | None) -> int:
    if n is not None:
        return n
    if not v:
        raise ValueError("the zero vector needs an explicit n")
    return len(next(iter(v)))


def phi_alpha(v: Mapping[ColMatrix, object], n: int | None = None) -> MatPoly:
    """``sum_M v_M D(M)`` for a rational vector v."""
    out = MatPoly(_size(v, n))
    for M, c in v.items():
        out = out + D_of(M) * as_rational(c)
    return out


def phi_zero(v: Mapping[ColMatrix, object], n: int | None = None) -> MatPoly:
    """Alpha = 0 intertwiner: ``e^M -> X^M``."""
    n = _size(v, n)
    return MatPoly(n, {flatten(M): AlphaPoly.constant(as_rational(c)) for M, c in v.items()})


def transition_matrix(lam: Sequence[int], n: int, l: int,
                      order: Sequence[ColMatrix] | None = None) -> PolyMatrix:
    """Matrix F with ``Phi_alpha(v_j) = sum_i F_ij Phi_0(v_i)``.

    The v_i are the echelon highest weight basis, so F_ij is read off at the
    pivot monomial of v_i; the full residual is then checked to vanish.
    ``order`` overrides the ordering of M_{n,l}, which changes the basis and
    conjugates F.
    """
    lam = as_partition(lam)
    if order is None:
        order = enumerate_basis(n, l)
    position = {M: i for i, M in enumerate(order)}
    vecs = highest_weight_vectors(lam, n, l, order)
    pivots = [min(v, key=position.__getitem__) for v in vecs]
    d = len(vecs)
    entries = [[ZERO] * d for _ in range(d)]
    for j, v in enumerate(vecs):
        img = phi_alpha(v)
        for i, piv in enumerate(pivots):
            entries[i][j] = img.coefficient(flatten(piv))
        resid = dict(img.terms)
        for i, w in enumerate(vecs):
            fij = entries[i][j]
            if fij.is_zero():
                continue
            for M, c in w.items():
                _add(resid, flatten(M), -(fij * c))
        if resid:
            raise ConsistencyError(f"transition matrix for {lam} leaves a nonzero residual")
    return PolyMatrix.from_rows(entries)


def multiplicity(lam: Sequence[int], n: int, l: int, alpha0) -> int:
    """Multiplicity of M_n^lam in U(gl_n) . det^(alpha0)(X)^l."""
    return rank_at(transition_matrix(lam, n, l), as_rational(alpha0))


def dominant_weights(n: int, l: int) -> list[tuple[int, ...]]:
    """Partitions of nl with at most n parts, lexicographically decreasing."""
    return list(partitions(n * l, max_length=n))


# --- decomposition report ----------------------------------------------------


@dataclass
class Component:
    lam: tuple[int, ...]
    kostka: int
    generic_mult: int
    mult: int
    critical_poly: AlphaPoly
    transition: PolyMatrix | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "kostka": self.kostka,
            "generic_mult": self.generic_mult,
            "mult": self.mult,
            "critical_poly": self.critical_poly.to_json(),
        }


@dataclass
class DecompositionReport:
    n: int
    l: int
    alpha: Fraction | None  # None means generic alpha
    components: list[Component]

    def multiplicities(self, nonzero: bool = True) -> dict[tuple[int, ...], int]:
        return {c.lam: c.mult for c in self.components if c.mult or not nonzero}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "alpha": "generic" if self.alpha is None else format_rational(self.alpha),
            "components": [c.to_json() for c in self.components],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def decompose(n: int, l: int, alpha0=None) -> DecompositionReport:
    """Irreducible decomposition of U(gl_n) . det^(alpha0)(X)^l.

    With ``alpha0=None`` the multiplicities are those at generic alpha.
    """
    alpha = None if alpha0 is None else as_rational(alpha0)
    check_guard(basis_size(n, l), "M_{n,l}", default=10**6)
    comps = []
    for lam in dominant_weights(n, l):
        F = transition_matrix(lam, n, l)
        g = generic_rank(F)
        mult = g if alpha is None else rank_at(F, alpha)
        if not 0 <= mult <= F.rows:
            raise ConsistencyError("multiplicity outside [0, Kostka]")
        comps.append(Component(lam, F.rows, g, mult, critical_alphas(F), F))
    return DecompositionReport(n, l, alpha, comps)


# --- Sym^l(Sym^n(C^n)) -------------------------------------------------------


def _sym_basis(n: int, l: int) -> list[tuple]:
    inner = compositions(n, n)  # monomials of Sym^n(C^n) as exponent vectors
    out = []

    def rec(start: int, left: int, acc: list):
        if left == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(inner)):
            acc.append(inner[i])
            rec(i, left - 1, acc)
            acc.pop()

    rec(0, l, [])
    return out


def _sym_weight(b: tuple) -> tuple[int, ...]:
    return tuple(sum(col) for col in zip(*b))


def sym_sym_action(p: int, q: int, v: Mapping[tuple, object]) -> dict:
    """E_pq on Sym^l(Sym^n(C^n)) in the monomial basis (Leibniz rule)."""
    out: dict = {}
    for b, c in v.items():
        for u in set(b):
            cq = u[q - 1]
            if not cq:
                continue
            mult = b.count(u)
            moved = list(u)
            moved[q - 1] -= 1
            moved[p - 1] += 1
            rest = list(b)
            rest.remove(u)
            new = tuple(sorted(rest + [tuple(moved)], reverse=True))
            _add(out, new, c * mult * cq)
    return out


def sym_sym_decompose(n: int, l: int) -> dict[tuple[int, ...], int]:
    """Multiplicities of the irreducibles in Sym^l(Sym^n(C^n)), computed
    from the raising-operator kernels on each dominant weight space."""
    basis = _sym_basis(n, l)
    check_guard(len(basis), "Sym^l(Sym^n C^n)", default=10**6)
    by_weight: dict = {}
    for b in basis:
        by_weight.setdefault(_sym_weight(b), []).append(b)
    out = {}
    for lam in dominant_weights(n, l):
        space = by_weight.get(_pad(lam, n), [])
        if not space:
            continue
        k = len(highest_weight_kernel(space, n, sym_sym_action))
        if k:
            out[lam] = k
    return out


@dataclass
class ConjectureResult:
    n: int
    l: int
    holds: bool
    permanent: dict
    sym_sym: dict


def conjecture_check(n: int, l: int) -> ConjectureResult:
    """Compare the alpha = 1 decomposition with that of Sym^l(Sym^n(C^n))."""
    perm = decompose(n, l, 1).multiplicities()
    ss = sym_sym_decompose(n, l)
    return ConjectureResult(n, l, perm == ss, perm, ss)
