"""Exact integer and Laurent polynomials, characteristic polynomials, and the
Alexander polynomial computed two independent ways (monodromy and Burau)."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import flint

from . import linalg
from .braid import BraidWord, NotAKnotError, components, lorenz_braid
from .diagram import YoungDiagram


class PolynomialError(ArithmeticError):
    """Inexact division or a failed consistency check."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, stored in ascending degree."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls((0,) * k + (c,))

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Ascending coefficient list, ``"1,-1,1"``."""
        try:
            return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))
        except ValueError as exc:
            raise PolynomialError(f"cannot parse coefficients {text!r}") from exc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self), len(other))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-x for x in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(other * x for x in self.coeffs)
        if not self or not other:
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def content(self) -> int:
        return math.gcd(*self.coeffs)

    def primitive(self) -> "IntPolynomial":
        g = self.content()
        if g == 0:
            return self
        if self.lead < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def divmod(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Division in Z[t]; raises unless every quotient coefficient is integral."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        q = [0] * max(len(rem) - len(other) + 1, 0)
        lead = other.lead
        for k in range(len(q) - 1, -1, -1):
            top = rem[k + other.degree]
            if top % lead:
                raise PolynomialError("quotient is not integral")
            f = top // lead
            q[k] = f
            if f:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= f * b
        return IntPolynomial(q), IntPolynomial(rem)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divmod(other)
        if r:
            raise PolynomialError(f"{other} does not divide {self}")
        return q

    def valuation(self) -> int:
        """Largest k with t^k dividing the polynomial."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise PolynomialError("the zero polynomial has no valuation")

    def normalized(self) -> "IntPolynomial":
        """Representative up to units +-t^k: no t factor, positive constant term."""
        if not self:
            return self
        p = IntPolynomial(self.coeffs[self.valuation():])
        return -p if p.coeffs[0] < 0 else p

    def reciprocal(self) -> "IntPolynomial":
        return IntPolynomial(reversed(self.coeffs))

    def palindromic_sign(self) -> int:
        """+1 or -1 if t^deg p(1/t) = +-p(t), else 0."""
        r = self.reciprocal()
        if r == self:
            return 1
        if r == -self:
            return -1
        return 0

    def l1(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    def __str__(self) -> str:
        if not self:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = "t" if k == 1 else f"t^{k}" if k else ""
            coef = str(mag) if mag != 1 or not body else ""
            terms.append((sign, coef + body))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return " ".join([head] + [f"{s} {t}" for s, t in terms[1:]])

    def to_text(self) -> str:
        return ",".join(map(str, self.coeffs))

    def to_dict(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "IntPolynomial":
        return cls(tuple(data["coeffs"]))


def gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd in Z[t] (positive leading coefficient)."""
    if not a:
        return b.primitive()
    if not b:
        return a.primitive()
    g = flint.fmpz_poly(list(a.coeffs)).gcd(flint.fmpz_poly(list(b.coeffs)))
    return IntPolynomial(int(c) for c in g.coeffs()).primitive()


def squarefree_factors(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's decomposition: primitive square-free factors with multiplicities."""
    if p.degree < 1:
        return []
    a = p.primitive()
    dp = a.derivative()
    g = gcd(a, dp)
    b, c = a.exact_div(g), dp.exact_div(g)
    out, k = [], 1
    while b.degree > 0:
        d = c - b.derivative()
        h = gcd(b, d)
        if h.degree > 0:
            out.append((h, k))
        b, c = b.exact_div(h), d.exact_div(h)
        k += 1
    return out


# -- Laurent polynomials -----------------------------------------------------------


@dataclass(frozen=True)
class LaurentPolynomial:
    """``t^low * poly`` with ``poly`` an :class:`IntPolynomial` not divisible by t."""

    poly: IntPolynomial
    low: int = 0

    def __post_init__(self):
        p, low = self.poly, self.low
        if not isinstance(p, IntPolynomial):
            p = IntPolynomial(p)
        if p:
            v = p.valuation()
            if v:
                p, low = IntPolynomial(p.coeffs[v:]), low + v
        else:
            low = 0
        object.__setattr__(self, "poly", p)
        object.__setattr__(self, "low", low)

    @classmethod
    def const(cls, c: int) -> "LaurentPolynomial":
        return cls(IntPolynomial((c,)))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "LaurentPolynomial":
        return cls(IntPolynomial((c,)), k)

    def __bool__(self) -> bool:
        return bool(self.poly)

    @property
    def high(self) -> int:
        return self.low + self.poly.degree

    def _aligned(self, other):
        low = min(self.low, other.low) if self and other else (self.low if self else other.low)
        a = IntPolynomial((0,) * (self.low - low) + self.poly.coeffs) if self else IntPolynomial()
        b = IntPolynomial((0,) * (other.low - low) + other.poly.coeffs) if other else IntPolynomial()
        return a, b, low

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        a, b, low = self._aligned(other)
        return LaurentPolynomial(a + b, low)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(-self.poly, self.low)

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial(self.poly * other, self.low)
        return LaurentPolynomial(self.poly * other.poly, self.low + other.low)

    __rmul__ = __mul__

    def __call__(self, x):
        return self.poly(x) * x**self.low

    def to_polynomial(self) -> IntPolynomial:
        """Clear the unit t^low."""
        return self.poly

    def __str__(self) -> str:
        if not self:
            return "0"
        return f"t^{self.low} * ({self.poly})" if self.low else str(self.poly)


LaurentMatrix = list[list[LaurentPolynomial]]

_ZERO = LaurentPolynomial(IntPolynomial())
_ONE = LaurentPolynomial.const(1)
_T = LaurentPolynomial.monomial(1)
_TINV = LaurentPolynomial.monomial(-1)


def laurent_identity(n: int) -> LaurentMatrix:
    return [[_ONE if i == k else _ZERO for k in range(n)] for i in range(n)]


def laurent_matmul(a: LaurentMatrix, b: LaurentMatrix) -> LaurentMatrix:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for k in range(p):
            acc = _ZERO
            for j in range(m):
                if a[i][j] and b[j][k]:
                    acc = acc + a[i][j] * b[j][k]
            row.append(acc)
        out.append(row)
    return out


# -- characteristic polynomials -----------------------------------------------------


def charpoly(m: Sequence[Sequence[int]]) -> IntPolynomial:
    """det(tI - M), exactly (FLINT's integer-matrix characteristic polynomial)."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 0:
        return IntPolynomial((1,))
    p = flint.fmpz_mat([[int(x) for x in row] for row in m]).charpoly()
    return IntPolynomial(int(c) for c in p.coeffs())


def charpoly_interpolated(m: Sequence[Sequence[int]]) -> IntPolynomial:
    """det(tI - M) from fraction-free determinants at t = 0..n and exact
    Lagrange interpolation.  Slow; used as an independent check."""
    n = len(m)
    values = []
    for t in range(n + 1):
        shifted = [[(t if i == k else 0) - int(x) for k, x in enumerate(row)] for i, row in enumerate(m)]
        values.append(linalg.bareiss_det(shifted))
    # Newton forward differences on the points 0..n
    diffs, table = [], list(values)
    for k in range(n + 1):
        diffs.append(table[0])
        table = [b - a for a, b in zip(table, table[1:])]
    # p(t) = sum_k diffs[k] * C(t, k)
    acc = [Fraction(0)] * (n + 1)
    basis = [Fraction(1)]  # coefficients of t(t-1)...(t-k+1)
    for k in range(n + 1):
        scale = Fraction(diffs[k], _factorial(k))
        for i, c in enumerate(basis):
            acc[i] += scale * c
        basis = [Fraction(0)] + basis
        for i in range(len(basis) - 1):
            basis[i] -= k * basis[i + 1]
    if any(c.denominator != 1 for c in acc):
        raise PolynomialError("interpolation produced non-integral coefficients")
    return IntPolynomial(int(c) for c in acc)


def _factorial(k: int) -> int:
    out = 1
    for x in range(2, k + 1):
        out *= x
    return out


def check_alexander(p: IntPolynomial) -> IntPolynomial:
    """Normalize and verify palindromy and |p(1)| = 1."""
    q = p.normalized()
    if not q.palindromic_sign():
        raise PolynomialError(f"{q} is not palindromic")
    if abs(q(1)) != 1:
        raise PolynomialError(f"|Delta(1)| = {abs(q(1))} for {q}")
    return q


def alexander_from_monodromy(d: YoungDiagram) -> IntPolynomial:
    """Characteristic polynomial of the standard monodromy, normalized."""
    from .homology import standard_monodromy

    h = standard_monodromy(d)
    p = check_alexander(charpoly(h.as_lists()))
    if p.degree != d.n:
        raise PolynomialError(f"degree {p.degree} differs from twice the genus {d.n}")
    return p


# -- reduced Burau -------------------------------------------------------------------


def burau_reduced(letter: int, sign: int, strands: int) -> LaurentMatrix:
    """Reduced Burau matrix of sigma_letter^sign, size (strands - 1).

    sigma_i acts on rows i-1, i, i+1 through the block
    [[1, t, 0], [0, -t, 0], [0, 1, 1]] (truncated at the edges); for two
    strands this is the 1x1 matrix (-t).
    """
    if not 1 <= letter <= strands - 1:
        raise ValueError(f"generator index {letter} out of range for {strands} strands")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = strands - 1
    m = laurent_identity(n)
    k = letter - 1
    if sign > 0:
        m[k][k] = -_T
        if k > 0:
            m[k - 1][k] = _T
        if k < n - 1:
            m[k + 1][k] = _ONE
    else:
        m[k][k] = -_TINV
        if k > 0:
            m[k - 1][k] = _ONE
        if k < n - 1:
            m[k + 1][k] = _TINV
    return m


def burau_word(w: BraidWord) -> LaurentMatrix:
    """Product of the reduced Burau matrices of the letters, in word order.

    Each letter changes only one column, so the product is accumulated by
    column updates instead of full matrix products.
    """
    n = w.strands - 1
    m = laurent_identity(n)
    for x, s in zip(w.letters, w.signs):
        k = x - 1
        # right multiplication by the letter's matrix: column k becomes a
        # combination of columns k-1, k, k+1
        diag, left, right = (-_T, _T, _ONE) if s > 0 else (-_TINV, _ONE, _TINV)
        for row in m:
            acc = row[k] * diag
            if k > 0 and row[k - 1]:
                acc = acc + row[k - 1] * left
            if k < n - 1 and row[k + 1]:
                acc = acc + row[k + 1] * right
            row[k] = acc
    return m


def laurent_det(m: LaurentMatrix) -> LaurentPolynomial:
    """Determinant over Z[t, 1/t]: clear denominators, then fraction-free
    elimination in Z[t] with exact divisions."""
    n = len(m)
    if n == 0:
        return _ONE
    shift = max(0, -min((e.low for row in m for e in row if e), default=0))
    rows = []
    for row in m:
        out = []
        for e in row:
            if not e:
                out.append(IntPolynomial())
            else:
                out.append(IntPolynomial((0,) * (e.low + shift) + e.poly.coeffs))
        rows.append(out)
    det = poly_bareiss_det(rows)
    return LaurentPolynomial(det, -shift * n)


def poly_bareiss_det(a: list[list[IntPolynomial]]) -> IntPolynomial:
    m = [list(row) for row in a]
    n = len(m)
    sign, prev = 1, IntPolynomial((1,))
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return IntPolynomial()
        pivot = m[k][k]
        for i in range(k + 1, n):
            a_ik = m[i][k]
            for j in range(k + 1, n):
                num = m[i][j] * pivot - a_ik * m[k][j]
                m[i][j] = num.exact_div(prev) if num else num
            m[i][k] = IntPolynomial()
        prev = pivot
    return m[n - 1][n - 1] * sign


def burau_determinant(w: BraidWord) -> LaurentPolynomial:
    """det(Burau(w) - I) over the Laurent ring."""
    b = burau_word(w)
    for i in range(len(b)):
        b[i][i] = b[i][i] - _ONE
    return laurent_det(b)


def alexander_from_burau(w: BraidWord) -> IntPolynomial:
    """Alexander polynomial of the closure of ``w`` from the reduced Burau matrix."""
    if components(w) != 1:
        raise NotAKnotError("closure of the word is a link")
    det = burau_determinant(w).to_polynomial()
    geometric = IntPolynomial((1,) * w.strands)  # 1 + t + ... + t^(s-1)
    return check_alexander(det.exact_div(geometric))


def alexander(d: YoungDiagram, method: str = "both") -> IntPolynomial:
    """Alexander polynomial of a Lorenz knot; ``both`` insists the methods agree."""
    if method == "charpoly":
        return alexander_from_monodromy(d)
    if method == "burau":
        return alexander_from_burau(lorenz_braid(d))
    if method == "both":
        a = alexander_from_monodromy(d)
        b = alexander_from_burau(lorenz_braid(d))
        if a != b:
            raise PolynomialError(f"monodromy gives {a}, Burau gives {b}")
        return a
    raise ValueError(f"unknown method {method!r}")
