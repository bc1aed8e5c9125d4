"""Closed forms for the coefficients A^{ij}_{mn}(q; a) of the exponent.

Leg indices are 1-based and cyclic for three legs: the successor of 3 is 1
and the predecessor of 1 is 3.  ``A^{ii}`` depends only on ``a_i``;
``A^{i,i+1}`` and ``A^{i,i-1}`` carry the +1/6 and -1/6 shifts.  For two
legs the pair (1, 2) uses the successor form and (2, 1) the predecessor
form, which is the three-leg rule restricted to legs 1 and 2.
"""

from __future__ import annotations

from typing import Sequence

from ..linalg import permutation_sign
from ..qseries import EXACT
from ..vertex import Framing


def _succ(i: int, legs: int) -> int:
    return i % legs + 1


def _pred(i: int, legs: int) -> int:
    return (i - 2) % legs + 1


class BogoliubovCoeffs:
    """Callable table ``(i, j, m, n) -> A^{ij}_{mn}``, memoised."""

    def __init__(self, framing: Framing | Sequence[int], legs: int, field=EXACT):
        if legs not in (1, 2, 3):
            raise ValueError("legs must be 1, 2 or 3")
        self.framing = framing if isinstance(framing, Framing) else Framing.of(framing)
        self.legs = legs
        self.field = field
        self._a = self.framing.as_tuple()
        self._cache: dict = {}

    def kind(self, i: int, j: int) -> str:
        if i == j:
            return "diag"
        if self.legs == 1:
            raise ValueError("one leg has only the diagonal block")
        if j == _succ(i, self.legs) and (self.legs == 3 or i == 1):
            return "succ"
        if j == _pred(i, self.legs):
            return "pred"
        raise ValueError(f"no coefficient block ({i},{j}) for {self.legs} legs")

    def __call__(self, i: int, j: int, m: int, n: int):
        key = (i, j, m, n)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self._compute(i, j, m, n)
        return hit

    def _compute(self, i: int, j: int, m: int, n: int):
        if m < 0 or n < 0:
            raise ValueError("mode indices are nonnegative")
        f = self.field
        ai = self._a[i - 1]
        aj = self._a[j - 1]
        sign = -1 if n & 1 else 1
        kind = self.kind(i, j)
        if kind == "diag":
            # (-1)^n q^{(2a+1)(m(m+1)-n(n+1))/4} / ([m+n+1][m]![n]!)
            e = 6 * (2 * ai + 1) * (m * (m + 1) - n * (n + 1))
            val = (
                f.tpow(e)
                * f.inverse_bracket(m + n + 1)
                * f.inverse_bracket_factorial(m)
                * f.inverse_bracket_factorial(n)
            )
            return val * sign
        e = 6 * ((2 * ai + 1) * m * (m + 1) - (2 * aj + 1) * n * (n + 1))
        direction = 1 if kind == "succ" else -1
        e += 4 * direction  # q^{+-1/6}
        terms = []
        for s in range(min(m, n) + 1):
            w = f.tpow(direction * 12 * (s + 1) * (m + n - s))
            terms.append(w * f.inverse_bracket_factorial(m - s) * f.inverse_bracket_factorial(n - s))
        val = f.sum(terms) * f.tpow(e)
        return val * (sign * direction)

    def blocks(self) -> list[tuple[int, int]]:
        ids = range(1, self.legs + 1)
        if self.legs == 1:
            return [(1, 1)]
        return [(i, j) for i in ids for j in ids]


def bogoliubov(f: Framing | Sequence[int], legs: int, field=EXACT) -> BogoliubovCoeffs:
    return BogoliubovCoeffs(f, legs, field)


def epsilon_sign(M: Sequence[int], A: Sequence[int]) -> int:
    """Sign of the permutation taking ``(A, M minus A)`` (each decreasing) to ``M``."""
    M = tuple(M)
    A = tuple(sorted(A, reverse=True))
    if len(set(A)) != len(A) or not set(A) <= set(M):
        raise ValueError(f"{A} is not a subset of {M}")
    if any(M[i] <= M[i + 1] for i in range(len(M) - 1)):
        raise ValueError("M must be strictly decreasing")
    rest = tuple(x for x in M if x not in A)
    return permutation_sign(A + rest)
