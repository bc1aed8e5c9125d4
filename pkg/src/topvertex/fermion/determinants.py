"""Determinantal formulas for the vacuum expansion coefficients.

``det_leg1`` and ``det_leg2`` are the proven one- and two-leg formulas.
The three-leg coefficient comes in two shapes:

* ``det_leg3_span``: a signed sum over splittings of every Frobenius set into
  blocks, with products of ``det(A^{ij})``;
* ``det_leg3``: triple block determinants in hook Schur functions and
  ``e``/``h`` at q^rho, summed over decreasing sequences.

The sign exponent and the q-weight of the Schur shape come as named
variants (``THREE_LEG_VARIANTS``) so that the choice is tested against the
direct expansion rather than assumed.  The sign rules are the printed
exponent, the printed exponent with its squared term ``r21*r21`` replaced by
a cross term or dropped, and ``laplace``, the exponent obtained by block
reordering in the generalised Laplace expansion.  The weights are
``uniform`` (``q^((a_i+1) kappa_i / 2)`` overall) and ``per-block`` (the
weights that ``A^{ij}`` actually carry in each block).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from ..linalg import det, permutation_sign
from ..partitions import Partition, kappa, make_partition, to_frobenius
from ..qseries import EXACT
from ..specialize import RHO, hook_schur_at, elem_and_homog_at
from ..vertex import Framing
from .coeffs import BogoliubovCoeffs, epsilon_sign

Pair = tuple[int, int]


def _block(coeffs: BogoliubovCoeffs, i: int, j: int, rows: Sequence[int], cols: Sequence[int]):
    field = coeffs.field
    return det([[coeffs(i, j, m, n) for n in cols] for m in rows], field)


def _sign(n: int) -> int:
    return -1 if n & 1 else 1


def det_leg1(mu: Partition, a: int, field=EXACT, coeffs: BogoliubovCoeffs | None = None):
    """``(-1)^(n_1+..+n_k) det(A_{m_i n_j})`` for ``mu = (M|N)``."""
    fc = to_frobenius(make_partition(mu))
    coeffs = coeffs or BogoliubovCoeffs(Framing(a), 1, field)
    return _block(coeffs, 1, 1, fc.m, fc.n) * _sign(sum(fc.n))


def _subsets(seq: Sequence[int], r: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(subset, complement) pairs, both decreasing, subset of size r."""
    for idx in combinations(range(len(seq)), r):
        chosen = tuple(seq[i] for i in idx)
        rest = tuple(seq[i] for i in range(len(seq)) if i not in idx)
        yield chosen, rest


def det_leg2(
    mu: Partition, nu: Partition, a1: int, a2: int, field=EXACT, coeffs: BogoliubovCoeffs | None = None
):
    """Two-leg coefficient as a signed sum of products of four block determinants."""
    fm = to_frobenius(make_partition(mu))
    fn = to_frobenius(make_partition(nu))
    coeffs = coeffs or BogoliubovCoeffs(Framing(a1, a2), 2, field)
    M, N, Mp, Np = fm.m, fm.n, fn.m, fn.n
    terms = []
    for r in range(min(len(M), len(Mp)) + 1):
        for A, MA in _subsets(M, r):
            eA = epsilon_sign(M, A)
            for B, NB in _subsets(N, r):
                d11 = _block(coeffs, 1, 1, MA, NB)
                if not d11:
                    continue
                eB = epsilon_sign(N, B)
                for Ap, MAp in _subsets(Mp, r):
                    d21 = _block(coeffs, 2, 1, Ap, B)
                    if not d21:
                        continue
                    eAp = epsilon_sign(Mp, Ap)
                    for Bp, NBp in _subsets(Np, r):
                        d22 = _block(coeffs, 2, 2, MAp, NBp)
                        d12 = _block(coeffs, 1, 2, A, Bp)
                        sgn = _sign(r) * eA * eB * eAp * epsilon_sign(Np, Bp)
                        val = d11 * d22 * d12 * d21
                        if val:
                            terms.append(val if sgn > 0 else -val)
    return field.sum(terms) * _sign(sum(N) + sum(Np))


# three legs ---------------------------------------------------------------

PAIRS: tuple[Pair, ...] = ((1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2))
_IDX = {p: k for k, p in enumerate(PAIRS)}


def _succ(i: int) -> int:
    return i % 3 + 1


def _pred(i: int) -> int:
    return _succ(_succ(i))


def _printed(square: Pair | None):
    def exponent(r: dict) -> int:
        e = r[3, 2] * r[1, 2] + r[3, 1] * r[3, 2] + r[3, 2] * r[1, 3]
        if square is not None:
            e += r[2, 1] * r[square]
        return e

    return exponent


def _printed_schur(square: Pair | None):
    def exponent(r: dict) -> int:
        e = r[2, 1] * r[2, 3] + r[3, 1] * r[3, 2] + r[3, 2] * r[1, 3]
        if square is not None:
            e += r[2, 1] * r[square]
        return e

    return exponent


def _laplace_span(r: dict) -> int:
    return (r[2, 1] + r[3, 1] + r[3, 2]) * (r[1, 2] + r[1, 3] + r[2, 3])


def _laplace_schur(r: dict) -> int:
    return (
        (r[1, 2] + r[1, 3]) * (r[2, 1] + r[3, 1] + r[3, 2])
        + r[2, 3] * (r[3, 1] + r[3, 2])
        + r[1, 2] * r[1, 3]
        + r[3, 1] * r[3, 2]
        + sum(r.values())
    )


# sign rule name -> (exponent for the span shape, exponent for the Schur shape)
_SQUARES: dict[str, Pair | None] = {
    "as-written": (2, 1),
    "r21r12": (1, 2),
    "r21r13": (1, 3),
    "r21r23": (2, 3),
    "r21r31": (3, 1),
    "r21r32": (3, 2),
    "no-square": None,
}
SIGN_RULES: dict[str, tuple] = {
    name: (_printed(sq), _printed_schur(sq)) for name, sq in _SQUARES.items()
}
SIGN_RULES["laplace"] = (_laplace_span, _laplace_schur)

WEIGHTS = ("uniform", "per-block")


@dataclass(frozen=True)
class ThreeLegVariant:
    """A sign rule for the quadratic exponent and a q-weight convention."""

    sign: str
    weight: str

    def __post_init__(self):
        if self.sign not in SIGN_RULES:
            raise ValueError(f"unknown sign rule {self.sign!r}")
        if self.weight not in WEIGHTS:
            raise ValueError(f"unknown weight {self.weight!r}")

    @property
    def name(self) -> str:
        return f"{self.sign}+{self.weight}"

    @classmethod
    def parse(cls, name: str) -> ThreeLegVariant:
        sign, _, weight = name.partition("+")
        return cls(sign, weight or "uniform")


THREE_LEG_VARIANTS: tuple[ThreeLegVariant, ...] = tuple(
    ThreeLegVariant(s, w) for w in WEIGHTS for s in SIGN_RULES
)
PRINTED_VARIANT = ThreeLegVariant("as-written", "uniform")
DEFAULT_VARIANT = ThreeLegVariant("laplace", "per-block")


def _admissible(k: Sequence[int]) -> Iterator[dict]:
    """All r^{ij} >= 0 with out-degree = in-degree <= k_i on every leg."""
    for rv in product(*(range(min(k[i - 1], k[j - 1]) + 1) for i, j in PAIRS)):
        r = dict(zip(PAIRS, rv))
        ok = True
        for i in (1, 2, 3):
            out = r[i, _succ(i)] + r[i, _pred(i)]
            if out != r[_succ(i), i] + r[_pred(i), i] or out > k[i - 1]:
                ok = False
                break
        if ok:
            yield r


def _sequence_bound(particles: Sequence[int], holes: Sequence[int]) -> int:
    """Largest index a decreasing sequence of block (i, j) can usefully reach.

    The sequence enters through ``x_{m-l}`` for particles m of leg i and
    ``y_{n-l}`` for holes n of leg j.  Past this bound one of the two families
    is entirely ``e_{<0}`` or ``h_{<0}``, so a whole row or column vanishes.
    """
    bound = min(max(particles, default=-1), max(holes, default=-1))
    past = bound + 1
    assert max(particles, default=-1) < past or max(holes, default=-1) < past
    return bound


def _decreasing(length: int, top: int) -> list[tuple[int, ...]]:
    return list(combinations(range(top, -1, -1), length)) if top >= 0 or length == 0 else []


def three_leg_terms(mus, f: Framing, weight: str = "per-block", field=EXACT) -> dict:
    """Unsigned Schur-shape contribution of each admissible ``r`` vector.

    Keys are tuples in the order of ``PAIRS``.  Included: the q^(+-1/6)
    factors, the ``-1`` of every predecessor-block coefficient, the overall
    framing weight and, for ``per-block``, the entry weights.  Excluded: the
    quadratic sign that distinguishes the variants.
    """
    mus = tuple(make_partition(m) for m in mus)
    if len(mus) != 3:
        raise ValueError("three partitions expected")
    f = f if isinstance(f, Framing) else Framing.of(f)
    if weight not in WEIGHTS:
        raise ValueError(f"unknown weight {weight!r}")
    return _three_leg_terms(mus, f, weight, field)


@lru_cache(maxsize=4096)
def _three_leg_terms(mus, f: Framing, weight: str, field) -> dict:
    fcs = [to_frobenius(m) for m in mus]
    M = {i + 1: fcs[i].m for i in range(3)}
    N = {i + 1: fcs[i].n for i in range(3)}
    k = [fc.rank for fc in fcs]
    per_block = weight == "per-block"
    zero = field.zero

    def e(x):
        return elem_and_homog_at(RHO, x, field)[0]

    def h(x):
        return elem_and_homog_at(RHO, x, field)[1]

    hooks = {
        i: [[hook_schur_at(m, n, RHO, field) for n in N[i]] for m in M[i]] for i in (1, 2, 3)
    }
    if per_block:
        # a particle m in a successor block gains q^(m(m+1)/2); a hole n in
        # a predecessor block gains q^(-n(n+1)/2)
        up = {i: [field.tpow(12 * m * (m + 1)) for m in M[i]] for i in (1, 2, 3)}
        down = {i: [field.tpow(-12 * n * (n + 1)) for n in N[i]] for i in (1, 2, 3)}
    bounds = {(i, j): _sequence_bound(M[i], N[j]) for i, j in PAIRS}

    def leg_det(i: int, seq: dict):
        p, s = _pred(i), _succ(i)
        rows = []
        for a, m in enumerate(M[i]):
            row = list(hooks[i][a])
            row += [h(m - x) for x in seq[i, p]]
            if per_block:
                row += [e(m - x) * up[i][a] for x in seq[i, s]]
            else:
                row += [e(m - x) for x in seq[i, s]]
            rows.append(row)
        pad = [zero] * (len(seq[i, p]) + len(seq[i, s]))
        for x in seq[s, i]:
            if per_block:
                rows.append([h(n - x) * down[i][b] for b, n in enumerate(N[i])] + pad)
            else:
                rows.append([h(n - x) for n in N[i]] + pad)
        for x in seq[p, i]:
            rows.append([e(n - x) for n in N[i]] + pad)
        return det(rows, field)

    a = f.as_tuple()
    base = sum((ai if per_block else ai + 1) * kappa(mu) for ai, mu in zip(a, mus))
    out = {}
    for r in _admissible(k):
        choices = [_decreasing(r[p], bounds[p]) for p in PAIRS]
        terms = []
        for pick in product(*choices):
            seq = dict(zip(PAIRS, pick))
            val = None
            for i in (1, 2, 3):
                d = leg_det(i, seq)
                if not d:
                    val = None
                    break
                val = d if val is None else val * d
            if val is not None:
                terms.append(val)
        if not terms:
            continue
        up_count = r[1, 2] + r[2, 3] + r[3, 1]
        down_count = r[2, 1] + r[3, 2] + r[1, 3]
        total = field.sum(terms) * field.tpow(12 * base + 4 * (up_count - down_count))
        out[tuple(r[p] for p in PAIRS)] = -total if down_count & 1 else total
    return out


def _resolve(variant) -> ThreeLegVariant:
    if isinstance(variant, ThreeLegVariant):
        return variant
    return ThreeLegVariant.parse(variant)


def det_leg3(mu1: Partition, mu2: Partition, mu3: Partition, f=Framing(), variant=DEFAULT_VARIANT, field=EXACT):
    """Three-leg coefficient from the triple block determinant formula."""
    v = _resolve(variant)
    exponent = SIGN_RULES[v.sign][1]
    terms = three_leg_terms((mu1, mu2, mu3), f, v.weight, field)
    vals = []
    for key, val in terms.items():
        r = dict(zip(PAIRS, key))
        vals.append(-val if exponent(r) & 1 else val)
    return field.sum(vals)


def det_leg3_all(mu1, mu2, mu3, f=Framing(), field=EXACT) -> dict[str, object]:
    """Values of every variant, sharing the unsigned work."""
    out = {}
    for v in THREE_LEG_VARIANTS:
        out[v.name] = det_leg3(mu1, mu2, mu3, f, v, field)
    return out


def det_leg3_span(
    mu1: Partition,
    mu2: Partition,
    mu3: Partition,
    f=Framing(),
    sign: str = "laplace",
    field=EXACT,
    coeffs: BogoliubovCoeffs | None = None,
):
    """Three-leg coefficient as a signed sum of products of nine block determinants.

    Leg i's particles split as (ii, i c(i), i c^2(i)) and its holes as
    (ii, c(i) i, c^2(i) i) with c the cyclic successor; each split carries
    its epsilon sign.
    """
    if sign not in SIGN_RULES:
        raise ValueError(f"unknown sign rule {sign!r}")
    exponent = SIGN_RULES[sign][0]
    f = f if isinstance(f, Framing) else Framing.of(f)
    coeffs = coeffs or BogoliubovCoeffs(f, 3, field)
    fcs = [to_frobenius(make_partition(m)) for m in (mu1, mu2, mu3)]
    M = {i + 1: fcs[i].m for i in range(3)}
    N = {i + 1: fcs[i].n for i in range(3)}
    k = [fc.rank for fc in fcs]
    terms = []
    for r in _admissible(k):
        q = exponent(r)
        for msplit in product(*(_splits3(M[i], r[i, _succ(i)], r[i, _pred(i)]) for i in (1, 2, 3))):
            for nsplit in product(*(_splits3(N[j], r[_succ(j), j], r[_pred(j), j]) for j in (1, 2, 3))):
                sgn = -1 if q & 1 else 1
                mp, npart = {}, {}
                for i in (1, 2, 3):
                    (own, to_s, to_p), es = msplit[i - 1]
                    mp[i, i], mp[i, _succ(i)], mp[i, _pred(i)] = own, to_s, to_p
                    sgn *= es
                for j in (1, 2, 3):
                    (own, from_s, from_p), es = nsplit[j - 1]
                    npart[j, j], npart[_succ(j), j], npart[_pred(j), j] = own, from_s, from_p
                    sgn *= es
                val = None
                for i in (1, 2, 3):
                    for j in (1, 2, 3):
                        d = _block(coeffs, i, j, mp[i, j], npart[i, j])
                        if not d:
                            val = None
                            break
                        val = d if val is None else val * d
                    else:
                        continue
                    break
                if val is not None:
                    terms.append(val if sgn > 0 else -val)
    total = field.sum(terms)
    return total * _sign(sum(sum(fc.n) for fc in fcs))


def _splits3(seq: Sequence[int], b: int, c: int):
    """Ordered splits ``seq = X + Y + Z`` with |Y| = b, |Z| = c, and their signs."""
    for Y, rest in _subsets(seq, b):
        for Z, X in _subsets(rest, c):
            yield (X, Y, Z), permutation_sign(X + Y + Z)
