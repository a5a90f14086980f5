"""Closed forms for n = 2: terminating hypergeometric polynomials, G_s^l,
the confluent Heun equation, Hahn polynomials and unit-circle roots.

Everything is exact except :func:`unit_circle_roots`, which is the only
floating point code in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from .exactalg import AlphaPoly, as_rational


class ParameterPole(ValueError):
    pass


@dataclass(frozen=True)
class HypergeomSpec:
    """Terminating pFq: ``sum_k prod (a_i)_k / prod (b_i)_k * (scale x)^k / k!``.

    The first upper parameter must be a nonpositive integer ``-N``; the
    series then stops at ``k = N``.
    """

    upper: tuple
    lower: tuple
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(as_rational(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(as_rational(b) for b in self.lower))
        object.__setattr__(self, "scale", as_rational(self.scale))
        first = self.upper[0] if self.upper else None
        if first is None or first > 0 or first.denominator != 1:
            raise ValueError("first upper parameter must be a nonpositive integer")

    @property
    def order(self) -> int:
        return int(-self.upper[0])


def pochhammer(a, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def _terms(upper: Sequence[Fraction], lower: Sequence[Fraction], stop: int) -> list[Fraction]:
    """Coefficients ``prod (a)_k / (prod (b)_k k!)`` for k = 0..stop, truncated
    where a numerator Pochhammer first vanishes."""
    out = [Fraction(1)]
    c = Fraction(1)
    for k in range(stop):
        num = Fraction(1)
        for a in upper:
            num *= a + k
        if num == 0:
            break
        den = Fraction(k + 1)
        for b in lower:
            den *= b + k
        if den == 0:
            raise ParameterPole("parameter pole")
        c = c * num / den
        out.append(c)
    return out


def hypergeom_poly(spec: HypergeomSpec) -> AlphaPoly:
    coeffs = _terms(spec.upper, spec.lower, spec.order)
    return AlphaPoly(c * spec.scale**k for k, c in enumerate(coeffs))


def G(s: int, gamma) -> AlphaPoly:
    """``G_s^gamma(x) = F(-s, gamma - s + 1, -gamma; -x)``."""
    gamma = as_rational(gamma)
    if s < 0 or s > gamma:
        raise ValueError("need 0 <= s <= gamma")
    return hypergeom_poly(HypergeomSpec((-s, gamma - s + 1), (-gamma,), -1))


def transition_closed_form(l: int, s: int) -> AlphaPoly:
    """``(1 + alpha)^(l - s) G_s^l(alpha)``, the n = 2 transition scalar."""
    return AlphaPoly.linear(1, 1) ** (l - s) * G(s, l)


def heun_residual(l: int, s: int, f: AlphaPoly | None = None, potential: str = "derived") -> AlphaPoly:
    """Residual of the confluent Heun equation for ``f(x) = F^{(2l-s,s)}(-x)``.

    Cleared of denominators the equation reads

        x(x-1)^2 f'' + (2x - l(x-1))(x-1) f' + (s - (l-s)^2 - c x) f = 0

    with ``c = l`` (``potential="derived"``, obtained by substituting
    ``(1-x)^(l-s)`` into the hypergeometric equation of G) or ``c = 1``
    (``potential="printed"``).  The two agree only for l = 1.  Pass ``f`` to
    test some other polynomial against the same operator.
    """
    if f is None:
        f = AlphaPoly.linear(1, -1) ** (l - s) * G(s, l).rescale(-1)
    c = {"derived": l, "printed": 1}[potential]
    x = AlphaPoly.alpha()
    xm1 = AlphaPoly.linear(-1, 1)
    d1 = f.derivative()
    d2 = d1.derivative()
    return (x * xm1 * xm1 * d2
            + (x * 2 - xm1 * l) * xm1 * d1
            + AlphaPoly.linear(s - (l - s) ** 2, -c) * f)


# --- Hahn polynomials ---------------------------------------------------------


def hahn_Q(p: int, a, b, N: int, x) -> Fraction:
    """``Q_p(x; a, b, N) = 3F2(-p, p+a+b+1, -x; a+1, -N; 1)``."""
    a, b, x = as_rational(a), as_rational(b), as_rational(x)
    coeffs = _terms((Fraction(-p), p + a + b + 1, -x), (a + 1, Fraction(-N)), p)
    return sum(coeffs, Fraction(0))


def hahn_generating(l: int, p: int, a, b) -> AlphaPoly:
    """``sum_s C(l,s) Q_p(s; a, b, l) alpha^s``."""
    return AlphaPoly(comb(l, s) * hahn_Q(p, a, b, l, s) for s in range(l + 1))


CONVENTIONS = {
    "(-l-1,-l-1,l)": lambda l: (-l - 1, -l - 1),
    "(l-1,l-1,l)": lambda l: (l - 1, l - 1),
}


@dataclass
class HahnReport:
    l: int
    matches: dict  # p -> {convention: bool}

    def matching(self, p: int) -> list[str]:
        return [name for name, ok in self.matches[p].items() if ok]

    @property
    def always_matching(self) -> list[str]:
        """Conventions that reproduce the closed form for every p."""
        return [name for name in CONVENTIONS if all(m[name] for m in self.matches.values())]

    @property
    def winner(self) -> str | None:
        always = self.always_matching
        return always[0] if len(always) == 1 else None

    def to_json(self) -> dict:
        return {"l": self.l, "winner": self.winner,
                "matches": {str(p): m for p, m in self.matches.items()}}


def hahn_identity_check(l: int) -> HahnReport:
    """Test both Hahn parameterizations against ``(1+alpha)^(l-p) G_p^l``."""
    if l > 8:
        raise ValueError("hahn check supports l <= 8")
    matches = {}
    for p in range(l + 1):
        target = transition_closed_form(l, p)
        row = {}
        for name, params in CONVENTIONS.items():
            a, b = params(l)
            try:
                row[name] = hahn_generating(l, p, a, b) == target
            except ParameterPole:
                row[name] = False
        matches[p] = row
    return HahnReport(l, matches)


# --- roots ----------------------------------------------------------------------


@dataclass
class UnitCircleReport:
    roots: list[complex]
    max_deviation: float
    tol: float

    @property
    def all_on_circle(self) -> bool:
        return self.max_deviation < self.tol


def _polish(coeffs: list[Fraction], z: complex, steps: int = 3) -> complex:
    # a few Newton steps in double precision on the exact coefficients
    c = [float(x) for x in coeffs]
    dc = [k * c[k] for k in range(1, len(c))]
    for _ in range(steps):
        f = np.polyval(c[::-1], z)
        d = np.polyval(dc[::-1], z)
        if d == 0:
            break
        step = f / d
        z = z - step
        if abs(step) < 1e-17:
            break
    return complex(z)


def unit_circle_roots(p: AlphaPoly, tol: float = 1e-8) -> UnitCircleReport:
    """Numeric roots (companion matrix eigenvalues, Newton polished) and the
    largest distance of their moduli from 1."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return UnitCircleReport([], 0.0, tol)
    highest_first = [float(c) for c in reversed(p.coeffs)]
    roots = [_polish(list(p.coeffs), complex(z)) for z in np.roots(highest_first)]
    dev = max(abs(abs(z) - 1.0) for z in roots)
    return UnitCircleReport(roots, float(dev), tol)


def G_at_one_parity(gamma: int, n: int) -> bool:
    """Exact check that ``G_n^gamma(1)`` vanishes iff n is odd."""
    value = G(n, gamma)(Fraction(1))
    return (value == 0) if n % 2 else (value != 0)
