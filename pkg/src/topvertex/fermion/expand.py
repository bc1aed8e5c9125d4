"""Direct expansion of exp(sum A^{ij}_{mn} psi^i_{m+1/2} psi^{j*}_{-n-1/2}) |0>.

The bilinears commute and square to zero, so the exponential is the product
of ``1 + A psi^{ij}_{mn}`` in any order.  Each factor is applied to the
running state in lexicographic order of ``(i, j, m, n)``.  Applying
``psi^{ij}_{mn}`` raises the energy of leg i by m + 1/2 and of leg j by
n + 1/2 and never lowers anything, so partial terms above the requested
energies are dropped as soon as they appear.
"""

from __future__ import annotations

from .coeffs import BogoliubovCoeffs
from .fock import VACUUM, FockState, act


def fock_expand(
    coeffs: BogoliubovCoeffs,
    legs: int | None = None,
    cutoff: int = 3,
    max_leg_size: int | None = None,
    max_total_size: int | None = None,
) -> FockState:
    """Truncated vacuum expansion.

    Only modes ``m, n <= cutoff`` enter.  Coefficients of charge-zero tuples
    whose partitions have all Frobenius coordinates ``<= cutoff`` and sizes
    within the bounds are exact; in particular every tuple with each
    partition of size ``<= min(cutoff + 1, max_leg_size)`` is.
    """
    legs = coeffs.legs if legs is None else legs
    if legs != coeffs.legs:
        raise ValueError("coefficient table was built for a different leg count")
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    field = coeffs.field
    cap_leg = None if max_leg_size is None else 2 * max_leg_size
    cap_total = None if max_total_size is None else 2 * max_total_size

    # basis key -> (coefficient, per-leg doubled energies)
    vac = (VACUUM,) * legs
    state: dict = {vac: (field.one, (0,) * legs)}
    for i, j in coeffs.blocks():
        li, lj = i - 1, j - 1
        for m in range(cutoff + 1):
            for n in range(cutoff + 1):
                de_i, de_j = 2 * m + 1, 2 * n + 1
                a = None
                updates = []
                for key, (c, en) in state.items():
                    en2 = list(en)
                    en2[li] += de_i
                    en2[lj] += de_j
                    if cap_leg is not None and (en2[li] > cap_leg or en2[lj] > cap_leg):
                        continue
                    if cap_total is not None and sum(en2) > cap_total:
                        continue
                    # psi^{ij}_{mn} = psi^i_{m+1/2} psi^{j*}_{-n-1/2}: star acts first
                    hit = act(key, lj, -n - 1, True)
                    if hit is None:
                        continue
                    s1, k1 = hit
                    hit = act(k1, li, m, False)
                    if hit is None:
                        continue
                    s2, k2 = hit
                    if a is None:
                        a = coeffs(i, j, m, n)
                    term = a * c
                    updates.append((k2, term if s1 * s2 > 0 else -term, tuple(en2)))
                for k2, term, en2 in updates:
                    old = state.get(k2)
                    if old is None:
                        state[k2] = (term, en2)
                    else:
                        state[k2] = (old[0] + term, en2)
    exact = cutoff + 1
    if max_leg_size is not None:
        exact = min(exact, max_leg_size)
    if max_total_size is not None:
        exact = min(exact, max_total_size)
    return FockState(legs, {k: v for k, (v, _) in state.items()}, exact_size=exact)
