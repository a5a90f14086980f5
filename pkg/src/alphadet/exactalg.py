"""Exact arithmetic over Q and Q[alpha].

Rationals are :class:`fractions.Fraction`.  :class:`AlphaPoly` is a dense
univariate polynomial with rational coefficients, :class:`PolyMatrix` a
rectangular matrix over Q[alpha] and :class:`BivarPoly` a polynomial in an
auxiliary variable ``t`` whose coefficients are AlphaPolys (used for
characteristic polynomials).

Nothing in here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class AlphaPoly:
    """Dense polynomial in alpha with Fraction coefficients, lowest degree first.

    Instances are immutable; trailing zero coefficients are stripped so that
    the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("AlphaPoly is immutable")

    # constructors

    @classmethod
    def constant(cls, c: Scalar) -> AlphaPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> AlphaPoly:
        return cls([0] * degree + [c])

    @classmethod
    def alpha(cls) -> AlphaPoly:
        return cls((0, 1))

    @classmethod
    def linear(cls, c0: Scalar, c1: Scalar) -> AlphaPoly:
        """``c0 + c1*alpha``"""
        return cls((c0, c1))

    @classmethod
    def _lift(cls, other) -> AlphaPoly:
        if isinstance(other, AlphaPoly):
            return other
        return cls.constant(as_rational(other))

    # basic properties

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlphaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == AlphaPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # ring operations

    def __neg__(self) -> AlphaPoly:
        return AlphaPoly(-c for c in self.coeffs)

    def __add__(self, other) -> AlphaPoly:
        other = AlphaPoly._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return AlphaPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> AlphaPoly:
        return self + (-AlphaPoly._lift(other))

    def __rsub__(self, other) -> AlphaPoly:
        return AlphaPoly._lift(other) - self

    def __mul__(self, other) -> AlphaPoly:
        if not isinstance(other, AlphaPoly):
            c = as_rational(other)
            if c == 0:
                return AlphaPoly()
            return AlphaPoly(x * c for x in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return AlphaPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return AlphaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> AlphaPoly:
        if k < 0:
            raise ValueError("negative power")
        result = AlphaPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other) -> AlphaPoly:
        """Division by a nonzero scalar, or exact division by a polynomial."""
        if isinstance(other, AlphaPoly):
            return self.exact_div(other)
        c = as_rational(other)
        if c == 0:
            raise ZeroDivisionError("division by zero")
        return AlphaPoly(x / c for x in self.coeffs)

    def divmod(self, other: AlphaPoly) -> tuple[AlphaPoly, AlphaPoly]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        rem = list(self.coeffs)
        dl, lead = other.degree, other.leading
        if len(rem) - 1 < dl:
            return AlphaPoly(), self
        quot = [Fraction(0)] * (len(rem) - dl)
        for k in range(len(rem) - 1 - dl, -1, -1):
            c = rem[k + dl] / lead
            quot[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return AlphaPoly(quot), AlphaPoly(rem[:dl])

    def __floordiv__(self, other: AlphaPoly) -> AlphaPoly:
        return self.divmod(other)[0]

    def __mod__(self, other: AlphaPoly) -> AlphaPoly:
        return self.divmod(other)[1]

    def exact_div(self, other: AlphaPoly) -> AlphaPoly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("not divisible")
        return q

    def divides(self, other: AlphaPoly) -> bool:
        if self.is_zero():
            return other.is_zero()
        return other.divmod(self)[1].is_zero()

    # calculus and evaluation

    def derivative(self) -> AlphaPoly:
        return AlphaPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, x):
        """Horner evaluation.  Works for Fractions, ints, floats, complex and
        AlphaPolys (composition)."""
        if isinstance(x, (int, str)) and not isinstance(x, bool):
            x = Fraction(x)
        acc = Fraction(0) if not isinstance(x, AlphaPoly) else AlphaPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate(self, x: Scalar) -> Fraction:
        return self(as_rational(x))

    def rescale(self, c: Scalar) -> AlphaPoly:
        """The polynomial ``alpha -> p(c*alpha)``."""
        c = as_rational(c)
        return AlphaPoly(a * c**k for k, a in enumerate(self.coeffs))

    def monic(self) -> AlphaPoly:
        if self.is_zero():
            return self
        return self / self.leading

    def gcd(self, other: AlphaPoly) -> AlphaPoly:
        return poly_gcd(self, other)

    def squarefree(self) -> AlphaPoly:
        """Monic squarefree part ``p / gcd(p, p')``."""
        if self.is_zero():
            raise ValueError("squarefree part of zero")
        if self.is_constant():
            return AlphaPoly.constant(1)
        return self.exact_div(poly_gcd(self, self.derivative())).monic()

    # display / serialization

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> AlphaPoly:
        return cls(Fraction(c) for c in data)

    def __repr__(self) -> str:
        return f"AlphaPoly({list(self.to_json())})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            body = {0: "", 1: "a"}.get(k, f"a^{k}")
            if not body:
                s = format_rational(mag)
            elif mag == 1:
                s = body
            else:
                s = f"{format_rational(mag)}*{body}"
            terms.append(("-" if c < 0 else "+", s))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, s in terms[1:]:
            out += f" {sign} {s}"
        return out


ZERO = AlphaPoly()
ONE = AlphaPoly.constant(1)
ALPHA = AlphaPoly.alpha()


def poly_gcd(a: AlphaPoly, b: AlphaPoly) -> AlphaPoly:
    """Monic gcd in Q[alpha] by the Euclidean algorithm."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def prod(polys: Iterable[AlphaPoly]) -> AlphaPoly:
    out = ONE
    for p in polys:
        out = out * p
    return out


# --- rational linear algebra -------------------------------------------------


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of a rational matrix.

    Returns the nonzero rows and their pivot columns.
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rational_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows or not rows[0]:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel, returned in reduced row echelon form."""
    if not rows:
        basis = [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
        return basis
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    if not basis:
        return []
    return rref(basis)[0]


# --- matrices over Q[alpha] ---------------------------------------------------


def _bareiss_rank(mat: list[list[AlphaPoly]]) -> int:
    """Rank over Q(alpha) by fraction-free elimination with full pivoting.

    Pivots are chosen of minimal degree to keep intermediate growth down.
    """
    a = [row[:] for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    prev = ONE
    rank = 0
    for k in range(min(m, n)):
        best = None
        for i in range(k, m):
            for j in range(k, n):
                if not a[i][j].is_zero():
                    if best is None or a[i][j].degree < a[best[0]][best[1]].degree:
                        best = (i, j)
        if best is None:
            break
        i, j = best
        a[k], a[i] = a[i], a[k]
        for row in a:
            row[k], row[j] = row[j], row[k]
        piv = a[k][k]
        for i in range(k + 1, m):
            for j in range(k + 1, n):
                a[i][j] = (piv * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = ZERO
        prev = piv
        rank += 1
    return rank


def bareiss_det(mat: Sequence[Sequence[AlphaPoly]]) -> AlphaPoly:
    """Determinant of a square matrix over Q[alpha], fraction-free."""
    n = len(mat)
    if n == 0:
        return ONE
    a = [list(row) for row in mat]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


class BivarPoly:
    """Polynomial in ``t`` with AlphaPoly coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[AlphaPoly]):
        cs = [AlphaPoly._lift(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("BivarPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, BivarPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: BivarPoly) -> BivarPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BivarPoly(out)

    def __mul__(self, other) -> BivarPoly:
        if not isinstance(other, BivarPoly):
            return BivarPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return BivarPoly(())
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return BivarPoly(out)

    @classmethod
    def linear_root(cls, root: AlphaPoly) -> BivarPoly:
        """``t - root``"""
        return cls((-root, ONE))

    def to_json(self) -> list[list[str]]:
        return [c.to_json() for c in self.coeffs]

    def __repr__(self) -> str:
        return f"BivarPoly({[str(c) for c in self.coeffs]})"


class PolyMatrix:
    """Rectangular matrix with AlphaPoly entries, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(AlphaPoly._lift(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError("entries do not match the shape")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> PolyMatrix:
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        return cls(nr, nc, [e for row in rows for e in row])

    @classmethod
    def identity(cls, d: int) -> PolyMatrix:
        return cls(d, d, [ONE if i == j else ZERO for i in range(d) for j in range(d)])

    @classmethod
    def diagonal(cls, diag: Sequence) -> PolyMatrix:
        d = len(diag)
        return cls(d, d, [diag[i] if i == j else ZERO for i in range(d) for j in range(d)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> PolyMatrix:
        return cls(rows, cols, [ZERO] * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> AlphaPoly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[AlphaPoly]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        return (isinstance(other, PolyMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        return PolyMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __mul__(self, other) -> PolyMatrix:
        if not isinstance(other, PolyMatrix):
            return PolyMatrix(self.rows, self.cols, [e * other for e in self.entries])
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    if a[i][k] and b[k][j]:
                        acc = acc + a[i][k] * b[k][j]
                out.append(acc)
        return PolyMatrix(self.rows, other.cols, out)

    __rmul__ = __mul__

    def evaluate(self, alpha0: Scalar) -> list[list[Fraction]]:
        a = as_rational(alpha0)
        return [[e(a) for e in row] for row in self.to_rows()]

    def trace(self) -> AlphaPoly:
        if not self.is_square:
            raise ValueError("not square")
        return sum((self[i, i] for i in range(self.rows)), ZERO)

    def det(self) -> AlphaPoly:
        if not self.is_square:
            raise ValueError("not square")
        return bareiss_det(self.to_rows())

    def is_scalar(self) -> bool:
        if not self.is_square:
            return False
        d0 = self[0, 0] if self.rows else ZERO
        return all((self[i, j] == (d0 if i == j else ZERO))
                   for i in range(self.rows) for j in range(self.cols))

    def to_json(self) -> list[list[list[str]]]:
        return [[e.to_json() for e in row] for row in self.to_rows()]

    def __repr__(self) -> str:
        return f"PolyMatrix({[[str(e) for e in row] for row in self.to_rows()]})"


def rank_at(m: PolyMatrix, alpha0: Scalar) -> int:
    """Rank of ``m`` with alpha specialised to the rational ``alpha0``."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return rational_rank(m.evaluate(alpha0))


def generic_rank(m: PolyMatrix) -> int:
    """Rank of ``m`` over the fraction field Q(alpha)."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return _bareiss_rank(m.to_rows())


def minors(m: PolyMatrix, r: int) -> Iterable[AlphaPoly]:
    rows = m.to_rows()
    for ri in combinations(range(m.rows), r):
        for ci in combinations(range(m.cols), r):
            yield bareiss_det([[rows[i][j] for j in ci] for i in ri])


def critical_alphas(m: PolyMatrix) -> AlphaPoly:
    """Monic squarefree polynomial vanishing exactly where the rank drops.

    This is the squarefree part of the gcd of all r x r minors, r being the
    generic rank.  A matrix of generic rank zero has an empty locus and
    gives the constant 1.
    """
    r = generic_rank(m)
    if r == 0:
        return ONE
    g = None
    for minor in minors(m, r):
        if minor.is_zero():
            continue
        g = minor.monic() if g is None else poly_gcd(g, minor)
        if g.is_constant():
            return ONE
    return g.squarefree()


def char_poly(m: PolyMatrix) -> BivarPoly:
    """``det(t*I - m)`` by Faddeev-LeVerrier.

    The only divisions are by the integers 1..d, which are units in Q[alpha],
    so the recurrence never leaves the polynomial ring.
    """
    if not m.is_square:
        raise ValueError("not square")
    d = m.rows
    coeffs = [ZERO] * (d + 1)
    coeffs[d] = ONE
    ident = PolyMatrix.identity(d)
    mk = PolyMatrix.zeros(d, d)
    for k in range(1, d + 1):
        mk = m * mk + ident * coeffs[d - k + 1]
        coeffs[d - k] = -(m * mk).trace() / k
    return BivarPoly(coeffs)
