"""Independent reference computations used only by the tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import sympy as sp

from topvertex.qseries import QRat

T = sp.Symbol("t")
U = sp.Symbol("u")


def to_sympy(x: QRat):
    num = sum(sp.Rational(c.numerator, c.denominator) * T**e for e, c in x.numerator.items())
    den = sum(sp.Rational(c.numerator, c.denominator) * T**e for e, c in x.denominator.items())
    return num / den


def sympy_equal(a, b) -> bool:
    return sp.simplify(sp.together(a - b)) == 0


def series_in_u(x: QRat, order: int) -> dict[int, Fraction]:
    """Expand in ``u = q^(-1/2) = t^(-12)`` up to ``u^order``."""

    def poly(lp):
        out = 0
        for e, c in lp.items():
            assert e % 12 == 0, "exponent is not a half-integer power of q"
            out += sp.Rational(c.numerator, c.denominator) * U ** (-e // 12)
        return out

    expr = sp.together(poly(x.numerator) / poly(x.denominator))
    ser = sp.series(expr, U, 0, order + 1).removeO()
    ser = sp.expand(ser)
    out = {}
    for k in range(0, order + 1):
        c = ser.coeff(U, k)
        if c:
            out[k] = Fraction(int(c.p), int(c.q))
    return out


def ssyt(shape: tuple[int, ...], max_entry: int):
    """Semistandard tableaux of ``shape`` with entries ``1..max_entry``, row by row."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    filling: dict = {}

    def rec(k):
        if k == len(cells):
            yield dict(filling)
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, filling[i, j - 1])
        if i > 0:
            lo = max(lo, filling[i - 1, j] + 1)
        for v in range(lo, max_entry + 1):
            filling[i, j] = v
            yield from rec(k + 1)
        filling.pop((i, j), None)

    yield from rec(0)


def schur_rho_series(shape: tuple[int, ...], order: int) -> dict[int, int]:
    """``s_shape(q^rho)`` in powers of ``u``: x_i = u^(2i-1), counted over tableaux."""
    out: dict[int, int] = {}
    for tab in ssyt(shape, (order + 1) // 2):
        w = sum(2 * v - 1 for v in tab.values())
        if w <= order:
            out[w] = out.get(w, 0) + 1
    return out


def bareiss(mat: list[list[int]]) -> int:
    m = [row[:] for row in mat]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1] if n else 1


def schur_poly_at(shape: tuple[int, ...], xs: list[int]) -> Fraction:
    """Bialternant formula at distinct integers."""
    n = len(xs)
    if len(shape) > n:
        return Fraction(0)
    lam = list(shape) + [0] * (n - len(shape))
    num = bareiss([[x ** (lam[j] + n - 1 - j) for j in range(n)] for x in xs])
    den = bareiss([[x ** (n - 1 - j) for j in range(n)] for x in xs])
    return Fraction(num, den)


def brute_det(mat):
    """Leibniz expansion, for tiny matrices."""
    from itertools import permutations

    n = len(mat)
    total = QRat(0)
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = QRat(1)
        for i in range(n):
            term = term * mat[i][perm[i]]
        total = total + (-term if inv & 1 else term)
    return total


__all__ = [
    "to_sympy",
    "sympy_equal",
    "series_in_u",
    "ssyt",
    "schur_rho_series",
    "schur_poly_at",
    "brute_det",
    "product",
]
