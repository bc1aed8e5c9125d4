"""The combinatorial side: W_{mu nu}, the topological vertex, framing.

Two independent formulas for the unframed vertex are provided: the
Littlewood-Richardson sum over two-partition values ``w_vertex_tv`` and the
skew-Schur sum at shifted points ``w_vertex_skew``.  Framed values are the
skew-Schur formula times ``q^(sum a_i kappa_i / 2)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .partitions import (
    Partition,
    conjugate,
    enumerate_partitions,
    kappa,
    lr_coefficient,
    make_partition,
    subpartitions,
)
from .qseries import EXACT, QRat
from .specialize import NEG_RHO, RHO, ShiftedSpec, schur_at, skew_schur_at


@dataclass(frozen=True)
class Framing:
    a1: int = 0
    a2: int = 0
    a3: int = 0

    def __post_init__(self):
        for a in (self.a1, self.a2, self.a3):
            if not isinstance(a, int) or isinstance(a, bool):
                raise TypeError("framings are integers")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)

    @classmethod
    def of(cls, values) -> Framing:
        vals = tuple(int(v) for v in values)
        if len(vals) > 3:
            raise ValueError("at most three framing integers")
        return cls(*(vals + (0,) * (3 - len(vals))))


class Path(str, enum.Enum):
    TV_FORMULA = "TV_FORMULA"
    SKEW_SCHUR_FORMULA = "SKEW_SCHUR_FORMULA"
    FERMION_DET = "FERMION_DET"
    FERMION_EXPANSION = "FERMION_EXPANSION"


@dataclass(frozen=True)
class VertexValue:
    value: QRat
    path: Path

    def to_json(self) -> dict:
        return {"path": self.path.value, "value": self.value.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> VertexValue:
        return cls(QRat.from_json(data["value"]), Path(data["path"]))


def _intersection(mu: Partition, nu: Partition) -> Partition:
    return tuple(min(a, b) for a, b in zip(mu, nu))


def _sign(n: int) -> int:
    return -1 if n & 1 else 1


def w_two(mu: Partition, nu: Partition, field=EXACT):
    """``W_{mu nu}`` as a sum over ``eta`` inside both shapes at ``q^(-rho)``."""
    mu, nu = make_partition(mu), make_partition(nu)
    return _w_two(mu, nu, field)


@lru_cache(maxsize=None)
def _w_two(mu: Partition, nu: Partition, field):
    terms = []
    for eta in subpartitions(_intersection(mu, nu)):
        a = skew_schur_at(mu, eta, NEG_RHO, field)
        if a:
            terms.append(a * skew_schur_at(nu, eta, NEG_RHO, field))
    total = field.sum(terms)
    return total * (_sign(sum(mu) + sum(nu)) * field.tpow(12 * (kappa(mu) + kappa(nu))))


def w_vertex_skew(mu1: Partition, mu2: Partition, mu3: Partition, field=EXACT):
    """Unframed vertex from skew Schur functions at shifted points."""
    return _w_skew(make_partition(mu1), make_partition(mu2), make_partition(mu3), field)


@lru_cache(maxsize=None)
def _w_skew(mu1: Partition, mu2: Partition, mu3: Partition, field):
    mu2t = conjugate(mu2)
    mu3t = conjugate(mu3)
    at_mu2t = ShiftedSpec(mu2t)
    at_mu2 = ShiftedSpec(mu2)
    terms = []
    for eta in subpartitions(_intersection(mu1, mu3t)):
        a = skew_schur_at(mu1, eta, at_mu2t, field)
        if a:
            terms.append(a * skew_schur_at(mu3t, eta, at_mu2, field))
    pref = schur_at(mu2t, NEG_RHO, field) * (_sign(sum(mu2)) * field.tpow(12 * kappa(mu3)))
    return field.sum(terms) * pref


def w_vertex_tv(mu1: Partition, mu2: Partition, mu3: Partition, field=EXACT):
    """Unframed vertex from the Littlewood-Richardson sum of ``W_{mu nu}`` ratios."""
    mu1, mu2, mu3 = make_partition(mu1), make_partition(mu2), make_partition(mu3)
    mu2t = conjugate(mu2)
    mu3t = conjugate(mu3)
    terms = []
    for eta in subpartitions(_intersection(mu1, mu3t)):
        d = sum(eta)
        for rho1 in enumerate_partitions(sum(mu1) - d):
            c1 = lr_coefficient(eta, rho1, mu1)
            if not c1:
                continue
            for rho3t in enumerate_partitions(sum(mu3) - d):
                c3 = lr_coefficient(eta, rho3t, mu3t)
                if not c3:
                    continue
                w = w_two(mu2t, rho1, field) * w_two(mu2, rho3t, field)
                terms.append(w * (c1 * c3))
    pref = field.tpow(12 * (kappa(mu2) + kappa(mu3)))
    return field.sum(terms) * pref / w_two(mu2, (), field)


def framing_factor(mus, f: Framing, field=EXACT):
    """``q^(sum_i a_i kappa(mu^i) / 2)``."""
    e = sum(a * kappa(m) for a, m in zip(f.as_tuple(), mus))
    return field.tpow(12 * e)


def w_framed(mu1: Partition, mu2: Partition, mu3: Partition, f: Framing = Framing(), field=EXACT):
    return framing_factor((mu1, mu2, mu3), f, field) * w_vertex_skew(mu1, mu2, mu3, field)


def vertex_value(mu1, mu2, mu3, f: Framing = Framing(), path: Path = Path.SKEW_SCHUR_FORMULA):
    """Framed vertex computed along the chosen combinatorial path."""
    if path is Path.SKEW_SCHUR_FORMULA:
        return VertexValue(w_framed(mu1, mu2, mu3, f), path)
    if path is Path.TV_FORMULA:
        return VertexValue(framing_factor((mu1, mu2, mu3), f) * w_vertex_tv(mu1, mu2, mu3), path)
    raise ValueError(f"{path} is not a combinatorial path")


def two_leg_coefficient(mu: Partition, nu: Partition, a1: int, a2: int, field=EXACT):
    """``q^(((a1+1) kappa_mu + a2 kappa_nu)/2) sum_eta s_{mu^t/eta} s_{nu/eta}`` at ``q^rho``.

    The coefficient of ``s_mu(x) s_nu(y)`` in the two-brane generating
    function; it equals ``w_framed(mu, nu, (), (a1, a2, 0))``.
    """
    mu, nu = make_partition(mu), make_partition(nu)
    mut = conjugate(mu)
    terms = []
    for eta in subpartitions(_intersection(mut, nu)):
        a = skew_schur_at(mut, eta, RHO, field)
        if a:
            terms.append(a * skew_schur_at(nu, eta, RHO, field))
    return field.sum(terms) * field.tpow(12 * ((a1 + 1) * kappa(mu) + a2 * kappa(nu)))


def check_wtt(mu: Partition, nu: Partition) -> bool:
    """``W_{mu^t nu^t}(1/q) == (-1)^(|mu|+|nu|) W_{mu nu}(q)``, exactly."""
    mu, nu = make_partition(mu), make_partition(nu)
    lhs = w_two(conjugate(mu), conjugate(nu)).invert_q()
    return lhs == w_two(mu, nu) * _sign(sum(mu) + sum(nu))


def check_two_leg_reduction(mu1: Partition, mu2: Partition) -> bool:
    """``W_{mu1, mu2, empty} == q^(kappa(mu2)/2) W_{mu1, mu2^t}``, exactly."""
    mu1, mu2 = make_partition(mu1), make_partition(mu2)
    rhs = QRat.monomial(12 * kappa(mu2)) * w_two(mu1, conjugate(mu2))
    return w_vertex_skew(mu1, mu2, ()) == rhs


__all__ = [
    "Framing",
    "Path",
    "VertexValue",
    "w_two",
    "w_vertex_skew",
    "w_vertex_tv",
    "w_framed",
    "framing_factor",
    "vertex_value",
    "two_leg_coefficient",
    "check_wtt",
    "check_two_leg_reduction",
]
