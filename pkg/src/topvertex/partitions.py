"""Integer partitions: Frobenius coordinates, contents, hooks, LR coefficients.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the empty partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalise (trailing zeros are dropped)."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x < 1 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition: {list(parts)!r}")
    return p


@dataclass(frozen=True)
class FrobeniusCoord:
    """``(m_1 .. m_k | n_1 .. n_k)`` with both sequences strictly decreasing."""

    m: tuple[int, ...]
    n: tuple[int, ...]

    def __post_init__(self):
        if len(self.m) != len(self.n):
            raise ValueError("Frobenius arms and legs need equal length")
        for seq in (self.m, self.n):
            if any(x < 0 for x in seq) or any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError(f"Frobenius sequence must be strictly decreasing and >= 0: {seq}")

    @property
    def rank(self) -> int:
        return len(self.m)

    def to_json(self) -> dict:
        return {"m": list(self.m), "n": list(self.n)}

    @classmethod
    def from_json(cls, data: dict) -> FrobeniusCoord:
        return cls(tuple(data["m"]), tuple(data["n"]))

    def __str__(self) -> str:
        return f"({','.join(map(str, self.m))}|{','.join(map(str, self.n))})"


def size(mu: Sequence[int]) -> int:
    return sum(mu)


@lru_cache(maxsize=None)
def conjugate(mu: Partition) -> Partition:
    if not mu:
        return ()
    return tuple(sum(1 for x in mu if x > j) for j in range(mu[0]))


def to_frobenius(mu: Partition) -> FrobeniusCoord:
    mu = tuple(mu)
    mt = conjugate(mu)
    k = sum(1 for i, x in enumerate(mu) if x > i)
    return FrobeniusCoord(
        tuple(mu[i] - i - 1 for i in range(k)),
        tuple(mt[i] - i - 1 for i in range(k)),
    )


def from_frobenius(fc: FrobeniusCoord) -> Partition:
    k = fc.rank
    if k == 0:
        return ()
    # rows below the diagonal block come from the legs
    rows = [fc.m[i] + i + 1 for i in range(k)]
    leg_ends = [fc.n[j] + j + 1 for j in range(k)]  # column j has this many boxes
    depth = leg_ends[0]
    for i in range(k, depth):
        rows.append(sum(1 for j in range(k) if leg_ends[j] > i))
    return make_partition(rows)


def hook(m: int, n: int) -> Partition:
    """The hook ``(m|n) = (m+1, 1^n)``."""
    return (m + 1,) + (1,) * n


def contents(mu: Partition) -> list[int]:
    return [j - i for i, row in enumerate(mu) for j in range(row)]


def kappa(mu: Partition) -> int:
    return sum(x * (x - 2 * i - 1) for i, x in enumerate(mu))


def hooks(mu: Partition) -> list[int]:
    """Hook lengths of all cells, sorted in decreasing order."""
    mt = conjugate(tuple(mu))
    out = [row - j + mt[j] - i - 1 for i, row in enumerate(mu) for j in range(row)]
    return sorted(out, reverse=True)


def contains(mu: Partition, nu: Partition) -> bool:
    """True if the diagram of ``nu`` fits inside the diagram of ``mu``."""
    return len(nu) <= len(mu) and all(x <= y for x, y in zip(nu, mu))


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rest: int, cap: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def partitions_up_to(n: int) -> list[Partition]:
    """Partitions of size 0..n, by size then reverse-lex."""
    return [mu for k in range(n + 1) for mu in enumerate_partitions(k)]


def subpartitions(mu: Partition) -> list[Partition]:
    """All ``eta`` contained in ``mu``, by size then reverse-lex."""
    out: list[Partition] = []

    def gen(i: int, cap: int, acc: tuple[int, ...]):
        out.append(acc)
        if i >= len(mu):
            return
        for x in range(min(cap, mu[i]), 0, -1):
            gen(i + 1, x, acc + (x,))

    gen(0, mu[0] if mu else 0, ())
    out.sort(key=lambda p: (sum(p), tuple(-x for x in p)))
    return out


@lru_cache(maxsize=None)
def lr_coefficient(nu: Partition, lam: Partition, mu: Partition) -> int:
    """Littlewood-Richardson coefficient ``c^mu_{nu lam}``.

    Counts semistandard fillings of ``mu/nu`` with content ``lam`` whose
    reverse reading word is a lattice word.
    """
    nu, lam, mu = tuple(nu), tuple(lam), tuple(mu)
    if sum(nu) + sum(lam) != sum(mu) or not contains(mu, nu) or not contains(mu, lam):
        return 0
    if not lam:
        return 1
    cells = []  # reading order: rows top-down, each right to left
    for i, row in enumerate(mu):
        start = nu[i] if i < len(nu) else 0
        for j in range(row - 1, start - 1, -1):
            cells.append((i, j))
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(lam) + 1)
    total = 0

    def place(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        i, j = cells[idx]
        hi = filling.get((i, j + 1), len(lam))
        lo = filling.get((i - 1, j), 0) + 1
        for v in range(lo, hi + 1):
            if counts[v] >= lam[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(i, j)] = v
            place(idx + 1)
            del filling[(i, j)]
            counts[v] -= 1

    place(0)
    return total


def to_json(mu: Partition) -> list[int]:
    return list(mu)


def from_json(data: Sequence[int]) -> Partition:
    return make_partition(data)
