"""Semi-infinite wedge basis, fermion operators and multi-leg states.

A half-integer mode ``r`` is stored as the integer ``r - 1/2``: 1/2 -> 0,
-1/2 -> -1.  A one-leg basis state records the occupied positive modes
(``added``, decreasing codes >= 0) and the vacated negative modes
(``removed``, decreasing codes <= -1).  Its wedge is the occupied set in
decreasing order, taken with sign +1.

For several legs the tensor product is flattened leg-major: an operator on
leg ``i`` first passes every fermion of legs ``0..i-1``, which contributes
``(-1)^(their total parity)``.  This realises the anticommutation of
operators on different legs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from ..partitions import FrobeniusCoord, Partition, from_frobenius, make_partition, to_frobenius
from ..qseries import QRat


class FockBasisState(NamedTuple):
    added: tuple[int, ...] = ()
    removed: tuple[int, ...] = ()

    @property
    def charge(self) -> int:
        return len(self.added) - len(self.removed)

    @property
    def parity(self) -> int:
        return (len(self.added) + len(self.removed)) & 1

    def energy2(self) -> int:
        """Twice the energy ``sum_added r - sum_removed r``."""
        return sum(2 * a + 1 for a in self.added) - sum(2 * c + 1 for c in self.removed)

    def occupied(self, x: int) -> bool:
        if x >= 0:
            return x in self.added
        return x not in self.removed

    def to_json(self):
        if self.charge == 0:
            return list(partition_of(self))
        return {"added": list(self.added), "removed": list(self.removed)}

    @classmethod
    def from_json(cls, data) -> FockBasisState:
        if isinstance(data, dict):
            return cls(tuple(data["added"]), tuple(data["removed"]))
        return state_from_partition(make_partition(data))


VACUUM = FockBasisState()


def mode_code(r: Fraction | float | int) -> int:
    """Integer code of a half-integer mode."""
    x = Fraction(r) - Fraction(1, 2)
    if x.denominator != 1:
        raise ValueError(f"{r} is not a half-integer")
    return int(x)


def _greater(s: FockBasisState, x: int) -> int:
    """Number of occupied modes above code ``x``."""
    if x >= 0:
        return sum(1 for a in s.added if a > x)
    return len(s.added) + (-1 - x) - sum(1 for c in s.removed if c > x)


def psi_basis(s: FockBasisState, x: int):
    """``psi`` at code ``x``: returns (sign, state) or None."""
    if s.occupied(x):
        return None
    sign = -1 if _greater(s, x) & 1 else 1
    if x >= 0:
        added = tuple(sorted(s.added + (x,), reverse=True))
        return sign, FockBasisState(added, s.removed)
    return sign, FockBasisState(s.added, tuple(c for c in s.removed if c != x))


def psi_star_basis(s: FockBasisState, x: int):
    """``psi*`` at code ``x``: returns (sign, state) or None."""
    if not s.occupied(x):
        return None
    sign = -1 if _greater(s, x) & 1 else 1
    if x >= 0:
        return sign, FockBasisState(tuple(a for a in s.added if a != x), s.removed)
    removed = tuple(sorted(s.removed + (x,), reverse=True))
    return sign, FockBasisState(s.added, removed)


def act(basis: tuple[FockBasisState, ...], leg: int, x: int, star: bool):
    """Apply one operator to a multi-leg basis tuple with the Koszul sign."""
    hit = (psi_star_basis if star else psi_basis)(basis[leg], x)
    if hit is None:
        return None
    sign, new = hit
    if sum(b.parity for b in basis[:leg]) & 1:
        sign = -sign
    return sign, basis[:leg] + (new,) + basis[leg + 1 :]


def state_from_partition(mu: Partition) -> FockBasisState:
    """Charge-zero basis state ``|mu>``: added ``m_i``, removed ``-n_i - 1``."""
    fc = to_frobenius(make_partition(mu))
    return FockBasisState(fc.m, tuple(-n - 1 for n in reversed(fc.n)))


def partition_of(s: FockBasisState) -> Partition:
    if s.charge != 0:
        raise ValueError("only charge-zero states are labelled by partitions")
    n = tuple(sorted((-c - 1 for c in s.removed), reverse=True))
    return from_frobenius(FrobeniusCoord(s.added, n))


class FockState:
    """Finite linear combination of multi-leg basis tuples.

    ``exact_size``: if set, only the coefficients of charge-zero tuples with
    every partition of size at most this value are guaranteed complete.
    """

    __slots__ = ("legs", "terms", "exact_size")

    def __init__(self, legs: int, terms: dict | None = None, exact_size: int | None = None):
        if legs not in (1, 2, 3):
            raise ValueError("legs must be 1, 2 or 3")
        self.legs = legs
        self.terms = {k: v for k, v in (terms or {}).items() if v}
        for k in self.terms:
            if len(k) != legs:
                raise ValueError("basis tuple length does not match legs")
        self.exact_size = exact_size

    @classmethod
    def vacuum(cls, legs: int = 1) -> FockState:
        return cls(legs, {(VACUUM,) * legs: QRat(1)})

    @classmethod
    def from_partitions(cls, items: dict, legs: int = 1) -> FockState:
        """Build from ``{partition or tuple of partitions: coefficient}``."""
        terms = {}
        for key, c in items.items():
            parts = (key,) if legs == 1 else key
            terms[tuple(state_from_partition(p) for p in parts)] = c
        return cls(legs, terms)

    def coefficient(self, *parts: Partition):
        key = tuple(state_from_partition(p) for p in parts)
        return self.terms.get(key, 0)

    def charge_zero(self) -> dict[tuple[Partition, ...], object]:
        return {
            tuple(partition_of(b) for b in k): v
            for k, v in self.terms.items()
            if all(b.charge == 0 for b in k)
        }

    def apply(self, leg: int, r, star: bool) -> FockState:
        if not 0 <= leg < self.legs:
            raise ValueError("leg index out of range")
        x = mode_code(r)
        out: dict = {}
        for k, v in self.terms.items():
            hit = act(k, leg, x, star)
            if hit is not None:
                sign, nk = hit
                out[nk] = out.get(nk, 0) + (v if sign > 0 else -v)
        return FockState(self.legs, out, self.exact_size)

    def __add__(self, other: FockState) -> FockState:
        if self.legs != other.legs:
            raise ValueError("cannot add states with different leg counts")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return FockState(self.legs, out)

    def scale(self, c) -> FockState:
        return FockState(self.legs, {k: c * v for k, v in self.terms.items()}, self.exact_size)

    def __eq__(self, other) -> bool:
        return isinstance(other, FockState) and self.legs == other.legs and self.terms == other.terms

    def to_json(self) -> list[dict]:
        out = []
        for k in sorted(self.terms, key=_basis_sort_key):
            v = self.terms[k]
            v = v if isinstance(v, QRat) else QRat(v)
            out.append({"legs": self.legs, "basis": [b.to_json() for b in k], "coeff": v.to_json()})
        return out

    @classmethod
    def from_json(cls, data: Sequence[dict]) -> FockState:
        if not data:
            return cls(1)
        legs = data[0]["legs"]
        terms = {}
        for item in data:
            key = tuple(FockBasisState.from_json(b) for b in item["basis"])
            terms[key] = QRat.from_json(item["coeff"])
        return cls(legs, terms)

    def __repr__(self) -> str:
        return f"FockState(legs={self.legs}, {len(self.terms)} terms)"


def _basis_sort_key(k: Iterable[FockBasisState]):
    return tuple((b.energy2(), b.charge, b.added, b.removed) for b in k)


def apply_psi(r, s: FockState, leg: int = 0) -> FockState:
    return s.apply(leg, r, star=False)


def apply_psi_star(r, s: FockState, leg: int = 0) -> FockState:
    return s.apply(leg, r, star=True)


def basis_from_operators(mu: Partition) -> FockState:
    """``(-1)^(n_1+..+n_k) prod_i psi_{m_i+1/2} psi*_{-n_i-1/2} |0>`` by operator application."""
    fc = to_frobenius(make_partition(mu))
    state = FockState.vacuum(1)
    for m, n in reversed(list(zip(fc.m, fc.n))):
        state = apply_psi_star(Fraction(-2 * n - 1, 2), state)
        state = apply_psi(Fraction(2 * m + 1, 2), state)
    return state.scale(-1 if sum(fc.n) & 1 else 1)
