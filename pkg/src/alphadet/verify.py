"""Named verification suites run by ``alphadet verify``.

Each suite returns a list of :class:`Check` lines.  A suite passes iff all
of its lines pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exactalg import ALPHA, AlphaPoly, PolyMatrix, char_poly
from .jacobi import (G, G_at_one_parity, hahn_identity_check, heun_residual,
                     unit_circle_roots)
from .spherical import l1_fourier_check, trace_crosscheck
from .symgrp import frobenius_specialization_check, partitions
from .tensormod import conjecture_check, transition_matrix


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _lin(c0, c1) -> AlphaPoly:
    return AlphaPoly.linear(c0, c1)


def _scalar(p: AlphaPoly, d: int) -> PolyMatrix:
    return PolyMatrix.diagonal([p] * d)


def printed_table_32() -> dict[tuple, PolyMatrix]:
    """The (n, l) = (3, 2) transition matrices as printed in the source table."""
    one_m, one_p, one_2p = _lin(1, -1), _lin(1, 1), _lin(1, 2)
    half = Fraction(1, 2)
    return {
        (6,): _scalar(one_p**2 * one_2p**2, 1),
        (5, 1): _scalar(one_m * one_p**2 * one_2p, 2),
        (4, 2): PolyMatrix.diagonal([one_p**2 * one_m * 2, one_p**2 * one_m * 2,
                                     one_p**2 * AlphaPoly((2, -2, 3))]),
        (4, 1, 1): _scalar(one_m * one_p * AlphaPoly((2, 0, -5)) * half, 1),
        (3, 3): _scalar(one_m**2 * AlphaPoly((1, 0, 1)), 1),
        (3, 2, 1): _scalar(one_m * one_p * AlphaPoly((4, -6, 5)) * Fraction(1, 4), 2),
        (2, 2, 2): _scalar(one_m**2 * AlphaPoly((2, -2, 5)) * half, 1),
    }


def corrected_table_32() -> dict[tuple, PolyMatrix]:
    """The printed table with the two entries that fail F(0) = I or the trace
    cross-check replaced: (4,2) carries an extra factor 1/2 and (3,3) is
    (1-alpha)^2 (1+alpha)^2."""
    table = printed_table_32()
    table[(4, 2)] = table[(4, 2)] * Fraction(1, 2)
    table[(3, 3)] = _scalar(_lin(1, -1) ** 2 * _lin(1, 1) ** 2, 1)
    return table


def _table_checks(table: dict) -> list[Check]:
    out = []
    for lam, expected in table.items():
        F = transition_matrix(lam, 3, 2)
        ok = F.rows == expected.rows and char_poly(F) == char_poly(expected)
        out.append(Check(f"F^{lam}_(3,2) char poly", ok, f"trace {F.trace()}"))
    return out


def suite_paper_table(**_) -> list[Check]:
    return _table_checks(printed_table_32())


def suite_paper_table_corrected(**_) -> list[Check]:
    return _table_checks(corrected_table_32())


def suite_heun(l_max: int = 6, **_) -> list[Check]:
    out = []
    for l in range(1, l_max + 1):
        for s in range(l + 1):
            r = heun_residual(l, s)
            out.append(Check(f"heun residual l={l} s={s}", r.is_zero(), str(r)))
    f = heun_residual(2, 1, f=ALPHA * heun_f(2, 1))
    out.append(Check("heun negative control x*f (l=2, s=1)", not f.is_zero(), str(f)))
    return out


def heun_f(l: int, s: int) -> AlphaPoly:
    return _lin(1, -1) ** (l - s) * G(s, l).rescale(-1)


def suite_unitarity(l_max: int = 8, tol: float = 1e-8, **_) -> list[Check]:
    out = []
    for l in range(l_max + 1):
        for s in range(l + 1):
            rep = unit_circle_roots(G(s, l), tol)
            out.append(Check(f"roots of G_{s}^{l} on unit circle", rep.all_on_circle,
                             f"max deviation {rep.max_deviation:.3e}"))
            out.append(Check(f"G_{s}^{l}(1) parity", G_at_one_parity(l, s)))
    return out


def suite_trace(**_) -> list[Check]:
    out = []
    for n, l in [(2, 2), (2, 3), (3, 2)]:
        for lam in partitions(n * l, max_length=n):
            rep = trace_crosscheck(n, l, lam)
            out.append(Check(f"gcp = tr F for (n,l)=({n},{l}) lambda={lam}", rep.match, str(rep.gcp)))
    for n in range(1, 6):
        out.append(Check(f"gcp(n,1,lambda) = f^lambda f_lambda for n={n}", l1_fourier_check(n)))
    return out


def suite_conjecture(n: int | None = None, l: int | None = None, **_) -> list[Check]:
    cases = [(n, l)] if n and l else [(2, 2), (2, 3), (2, 4), (3, 2)]
    out = []
    for a, b in cases:
        res = conjecture_check(a, b)
        out.append(Check(f"U.per^{b} ~ Sym^{b}(Sym^{a}) for n={a}", res.holds,
                         f"per: {res.permanent} sym: {res.sym_sym}"))
    return out


def suite_hahn(l_max: int = 6, **_) -> list[Check]:
    out = []
    common = None
    for l in range(1, l_max + 1):
        rep = hahn_identity_check(l)
        always = set(rep.always_matching)
        common = always if common is None else common & always
        for p in range(l + 1):
            out.append(Check(f"hahn l={l} p={p} has a matching convention", bool(rep.matching(p)),
                             ", ".join(rep.matching(p))))
    out.append(Check("one convention matches for every (l, p)", len(common or ()) == 1,
                     f"winner: {sorted(common or ())}"))
    return out


def suite_frobenius(**_) -> list[Check]:
    return [Check(f"Frobenius specialisation n={n}", frobenius_specialization_check(n)) for n in range(1, 8)]


SUITES: dict[str, Callable[..., list[Check]]] = {
    "paper-table": suite_paper_table,
    "paper-table-corrected": suite_paper_table_corrected,
    "heun": suite_heun,
    "unitarity": suite_unitarity,
    "trace": suite_trace,
    "conjecture": suite_conjecture,
    "hahn": suite_hahn,
    "frobenius": suite_frobenius,
}


def run_suite(name: str, **kwargs) -> list[Check]:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](**kwargs)
