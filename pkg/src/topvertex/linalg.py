"""Division-free determinants over a commutative ring.

Entries only need ``*``, unary ``-`` and truthiness; sums go through the
field's ``sum`` so exact values are reduced once per minor.  The matrices
here are small (at most about a dozen rows) and sparse, so Laplace expansion
with memoised minors beats elimination, which would divide.
"""

from __future__ import annotations

from typing import Sequence

from .qseries import EXACT


def det(matrix: Sequence[Sequence], field=EXACT):
    n = len(matrix)
    if n == 0:
        return field.one
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if n == 1:
        return matrix[0][0] if matrix[0][0] else field.zero
    memo: dict[int, object] = {}
    zero = field.zero

    def minor(i: int, mask: int):
        if i == n:
            return field.one
        hit = memo.get(mask)
        if hit is not None:
            return hit
        row = matrix[i]
        terms = []
        pos = 0
        for j in range(n):
            bit = 1 << j
            if not mask & bit:
                continue
            a = row[j]
            if a:
                sub = minor(i + 1, mask ^ bit)
                if sub:
                    term = a * sub
                    terms.append(-term if pos & 1 else term)
            pos += 1
        out = field.sum(terms) if terms else zero
        memo[mask] = out
        return out

    return minor(0, (1 << n) - 1)


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` into decreasing order."""
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] < seq[j]:
                inv += 1
            elif seq[i] == seq[j]:
                raise ValueError("repeated entry in permutation")
    return -1 if inv & 1 else 1
