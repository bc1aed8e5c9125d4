"""Fermionic side: Fock space, Bogoliubov coefficients, expansions, determinants."""

from .coeffs import BogoliubovCoeffs, bogoliubov, epsilon_sign
from .determinants import (
    DEFAULT_VARIANT,
    PRINTED_VARIANT,
    SIGN_RULES,
    THREE_LEG_VARIANTS,
    ThreeLegVariant,
    det_leg1,
    det_leg2,
    det_leg3,
    det_leg3_all,
    det_leg3_span,
    three_leg_terms,
)
from .expand import fock_expand
from .fock import (
    VACUUM,
    FockBasisState,
    FockState,
    act,
    apply_psi,
    apply_psi_star,
    basis_from_operators,
    mode_code,
    partition_of,
    state_from_partition,
)
from .kp import InsufficientTruncation, charged_size, kp_bilinear_residual

__all__ = [
    "BogoliubovCoeffs",
    "bogoliubov",
    "epsilon_sign",
    "DEFAULT_VARIANT",
    "PRINTED_VARIANT",
    "SIGN_RULES",
    "THREE_LEG_VARIANTS",
    "ThreeLegVariant",
    "det_leg1",
    "det_leg2",
    "det_leg3",
    "det_leg3_all",
    "det_leg3_span",
    "three_leg_terms",
    "fock_expand",
    "VACUUM",
    "FockBasisState",
    "FockState",
    "act",
    "apply_psi",
    "apply_psi_star",
    "basis_from_operators",
    "mode_code",
    "partition_of",
    "state_from_partition",
    "InsufficientTruncation",
    "charged_size",
    "kp_bilinear_residual",
]
