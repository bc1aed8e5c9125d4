"""Symmetric functions evaluated at q^rho, q^(-rho) and shifted q^(lambda+rho).

``q^rho`` is the point ``x_i = q^(-i+1/2)``; the shifted point replaces the
first ``len(lambda)`` coordinates by ``q^(lambda_i - i + 1/2)``.  Inversion
means substituting q -> 1/q afterwards.

Every function takes an optional ``field``: the default computes exact
``QRat`` values, a ``PointField`` computes the same quantity at a rational
value of ``t = q^(1/24)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import det
from .partitions import Partition, conjugate, contains, hooks, kappa, make_partition, to_frobenius
from .qseries import EXACT, QRat, inverse_bracket


@dataclass(frozen=True)
class ShiftedSpec:
    """Evaluation point ``q^(lam + rho)``, optionally with q -> 1/q."""

    lam: Partition = ()
    inverted: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lam", make_partition(self.lam))

    def invert(self) -> ShiftedSpec:
        return ShiftedSpec(self.lam, not self.inverted)

    def __str__(self) -> str:
        base = f"q^({list(self.lam)}+rho)" if self.lam else "q^rho"
        return base + (" at 1/q" if self.inverted else "")


RHO = ShiftedSpec()
NEG_RHO = ShiftedSpec((), True)


def power_sum_at_rho(n: int) -> QRat:
    """``p_n(q^rho) = 1/[n]``."""
    if n < 1:
        raise ValueError("power sums start at n = 1")
    return inverse_bracket(n)


@lru_cache(maxsize=None)
def _schur_rho(mu: Partition, field):
    out = field.tpow(6 * kappa(mu))  # q^(kappa/4)
    for h in hooks(mu):
        out = out * field.inverse_bracket(h)
    return out


def schur_at_rho(mu: Partition, field=EXACT):
    """Hook-content formula ``q^(kappa/4) / prod [h(e)]``."""
    return _schur_rho(make_partition(mu), field)


class _Table:
    """Growing lists of e_k and h_k at one non-inverted point."""

    __slots__ = ("lam", "field", "e", "h", "_eb", "_hb")

    def __init__(self, lam: Partition, field):
        self.lam = lam
        self.field = field
        self.e = [field.one]
        self.h = [field.one]
        self._eb = [field.one]  # e_j(b_1..b_l) for the shifted coordinates
        self._hb = [field.one]

    def _extend_finite(self, k: int) -> None:
        """e_j, h_j of the finitely many shifted coordinates, j <= k."""
        f = self.field
        lam = self.lam
        ell = len(lam)
        # b_i = q^(lam_i - i + 1/2), in t-units 24*lam_i - 24*i + 12
        bs = [f.tpow(24 * lam[i] - 24 * (i + 1) + 12) for i in range(ell)]
        if len(self._eb) <= k:
            eb = [f.one] + [f.zero] * k
            hb = [f.one] + [f.zero] * k
            for b in bs:
                for j in range(min(k, ell), 0, -1):
                    eb[j] = eb[j] + b * eb[j - 1]
                for j in range(1, k + 1):
                    hb[j] = hb[j] + b * hb[j - 1]
            self._eb = eb
            self._hb = hb

    def get(self, k: int):
        f = self.field
        while len(self.e) <= k:
            n = len(self.e)
            if not self.lam:
                # h_n = q^(n(n-1)/4)/[n]!, e_n = q^(-n(n-1)/4)/[n]!
                inv = f.inverse_bracket_factorial(n)
                self.h.append(f.tpow(6 * n * (n - 1)) * inv)
                self.e.append(f.tpow(-6 * n * (n - 1)) * inv)
                continue
            # tail coordinates are those of q^rho scaled by q^(-ell)
            self._extend_finite(max(k, 2 * n))
            ell = len(self.lam)
            base = _table((), f)
            base.get(n)
            es, hs = [], []
            for j in range(n + 1):
                scale = f.tpow(-24 * ell * (n - j))
                if j < len(self._eb) and self._eb[j]:
                    es.append(self._eb[j] * scale * base.e[n - j])
                hs.append(self._hb[j] * scale * base.h[n - j])
            self.e.append(f.sum(es))
            self.h.append(f.sum(hs))
        return self.e[k], self.h[k]


@lru_cache(maxsize=4096)
def _table(lam: Partition, field) -> _Table:
    return _Table(lam, field)


def _eh(spec: ShiftedSpec, k: int, field):
    if k < 0:
        return field.zero, field.zero
    if not spec.inverted:
        return _table(spec.lam, field).get(k)
    return _eh_inverted(spec.lam, k, field)


@lru_cache(maxsize=None)
def _eh_inverted(lam: Partition, k: int, field):
    e = field.flip(lambda g: _table(lam, g).get(k)[0])
    h = field.flip(lambda g: _table(lam, g).get(k)[1])
    return e, h


def elem_and_homog_at(spec: ShiftedSpec, k: int, field=EXACT):
    """``(e_k, h_k)`` at ``spec``; both vanish for negative ``k``."""
    return _eh(spec, k, field)


def elem_at(spec: ShiftedSpec, k: int, field=EXACT):
    return _eh(spec, k, field)[0]


def homog_at(spec: ShiftedSpec, k: int, field=EXACT):
    return _eh(spec, k, field)[1]


def skew_schur_at(mu: Partition, nu: Partition, spec: ShiftedSpec = RHO, field=EXACT):
    """``s_{mu/nu}`` at ``spec`` by Jacobi-Trudi.

    Uses ``det(h_{mu_i - nu_j - i + j})`` or its dual in ``e`` with
    conjugate shapes, whichever matrix is smaller.
    """
    mu, nu = make_partition(mu), make_partition(nu)
    return _skew_jt(mu, nu, spec, field)


@lru_cache(maxsize=65536)
def _skew_jt(mu: Partition, nu: Partition, spec: ShiftedSpec, field):
    if not contains(mu, nu):
        return field.zero
    if mu == nu:
        return field.one
    mt, nt = conjugate(mu), conjugate(nu)
    if len(mu) <= len(mt):
        a, b, idx = mu, nu, 1
    else:
        a, b, idx = mt, nt, 0
    n = len(a)
    bb = b + (0,) * (n - len(b))
    matrix = [
        [_eh(spec, a[i] - bb[j] - i + j, field)[idx] for j in range(n)] for i in range(n)
    ]
    return det(matrix, field)


def schur_at(mu: Partition, spec: ShiftedSpec = RHO, field=EXACT):
    return skew_schur_at(mu, (), spec, field)


def hook_schur_at(m: int, n: int, spec: ShiftedSpec = RHO, field=EXACT):
    """``s_{(m|n)} = sum_j (-1)^j h_{m+1+j} e_{n-j}``."""
    terms = []
    for j in range(n + 1):
        e_k = _eh(spec, n - j, field)[0]
        h_k = _eh(spec, m + 1 + j, field)[1]
        term = h_k * e_k
        terms.append(-term if j & 1 else term)
    return field.sum(terms)


def schur_hook_determinant(mu: Partition, spec: ShiftedSpec = RHO, field=EXACT):
    """Giambelli: ``s_mu = det(s_{(m_i|n_j)})`` over the Frobenius coordinates."""
    fc = to_frobenius(make_partition(mu))
    matrix = [[hook_schur_at(m, n, spec, field) for n in fc.n] for m in fc.m]
    return det(matrix, field)


def skew_schur_hook_determinant(
    mu: Partition, nu: Partition, spec: ShiftedSpec = RHO, field=EXACT
):
    """Block determinant in hook Schur functions for ``s_{mu/nu}``.

    With ``mu = (M|N)`` of rank k and ``nu = (S|T)`` of rank r this is
    ``(-1)^r det [[s_{(m_i|n_j)}, h_{m_i-s_j}], [e_{n_j-t_i}, 0]]``.
    """
    fm = to_frobenius(make_partition(mu))
    fn = to_frobenius(make_partition(nu))
    k, r = fm.rank, fn.rank
    if r > k:
        return field.zero
    zero = field.zero
    rows = []
    for i in range(k):
        row = [hook_schur_at(fm.m[i], fm.n[j], spec, field) for j in range(k)]
        row += [_eh(spec, fm.m[i] - fn.m[j], field)[1] for j in range(r)]
        rows.append(row)
    for i in range(r):
        row = [_eh(spec, fm.n[j] - fn.n[i], field)[0] for j in range(k)]
        row += [zero] * r
        rows.append(row)
    d = det(rows, field)
    return -d if r & 1 else d
