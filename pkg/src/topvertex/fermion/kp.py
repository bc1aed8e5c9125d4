"""Truncated check of the fermionic bilinear identity for KP tau functions.

A charge-zero vector v lies on the orbit of the vacuum exactly when
``sum_r psi_r v (x) psi*_r v = 0``.  The coefficient of a pair of basis
states ``(X, Y)`` of charges (+1, -1) only involves modes with
``-E(Y) <= r <= E(X)`` and components of v of size at most
``|X| + |Y| + 1``, so a finite computation decides it exactly once v is
known that far.
"""

from __future__ import annotations

from .fock import FockBasisState, FockState, psi_basis, psi_star_basis


class InsufficientTruncation(ValueError):
    """The state is not known far enough to decide the requested degree."""


def charged_size(s: FockBasisState) -> int:
    """Size of the partition labelling a basis state of any charge."""
    c = s.charge
    return (s.energy2() - c * c) // 2


def kp_bilinear_residual(v: FockState, degree: int) -> dict[tuple[FockBasisState, FockBasisState], object]:
    """Nonzero coefficients of the bilinear sum on pairs with ``|X| + |Y| <= degree``.

    An empty result means the identity holds through that degree.
    """
    if v.legs != 1:
        raise ValueError("the bilinear identity is checked on one-leg states")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if any(k[0].charge != 0 for k in v.terms):
        raise ValueError("the state must have charge zero")
    need = degree + 1
    if v.exact_size is not None and v.exact_size < need:
        raise InsufficientTruncation(
            f"degree {degree} needs the state exact through size {need}, have {v.exact_size}"
        )
    comps = [(k[0], c) for k, c in v.terms.items() if charged_size(k[0]) <= need]
    out: dict = {}
    # mode codes x = r - 1/2 with -(degree + 1) <= r <= degree + 1
    for x in range(-need - 1, need + 1):
        plus = _image(comps, x, psi_basis, degree)
        if not plus:
            continue
        minus = _image(comps, x, psi_star_basis, degree)
        for X, a in plus.items():
            room = degree - charged_size(X)
            for Y, b in minus.items():
                if charged_size(Y) <= room:
                    key = (X, Y)
                    out[key] = out.get(key, 0) + a * b
    return {k: c for k, c in out.items() if c}


def _image(comps, x: int, op, degree: int) -> dict:
    res: dict = {}
    for s, c in comps:
        hit = op(s, x)
        if hit is None:
            continue
        sign, t = hit
        if charged_size(t) > degree:
            continue
        res[t] = res.get(t, 0) + (c if sign > 0 else -c)
    return {k: c for k, c in res.items() if c}
