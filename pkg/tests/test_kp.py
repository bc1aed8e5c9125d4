import pytest

from topvertex.fermion import (
    FockBasisState,
    FockState,
    InsufficientTruncation,
    bogoliubov,
    charged_size,
    fock_expand,
    kp_bilinear_residual,
)
from topvertex.partitions import kappa, partitions_up_to
from topvertex.qseries import QRat, inverse_bracket
from topvertex.specialize import schur_at_rho
from topvertex.vertex import Framing


def one_leg_generating_state(a: int, size: int) -> FockState:
    """sum_mu q^(a kappa/2) s_mu(q^rho) |mu> through the given size."""
    items = {mu: QRat.monomial(12 * a * kappa(mu)) * schur_at_rho(mu) for mu in partitions_up_to(size)}
    st = FockState.from_partitions(items)
    st.exact_size = size
    return st


def test_charged_size():
    assert charged_size(FockBasisState()) == 0
    assert charged_size(FockBasisState((0,), ())) == 0
    assert charged_size(FockBasisState((1,), ())) == 1
    assert charged_size(FockBasisState((), (-2,))) == 1
    assert charged_size(FockBasisState((2,), (-1,))) == 3


def test_vacuum_has_no_residual():
    assert kp_bilinear_residual(FockState.vacuum(), 6) == {}


@pytest.mark.parametrize("a", [0, 1, -2])
def test_generating_state_has_no_residual(a):
    assert kp_bilinear_residual(one_leg_generating_state(a, 6), 5) == {}


def test_expanded_state_has_no_residual():
    v = fock_expand(bogoliubov(Framing(1), 1), 1, cutoff=4, max_total_size=5)
    assert v.exact_size == 5
    assert kp_bilinear_residual(v, 4) == {}


def test_truncation_is_checked():
    v = one_leg_generating_state(0, 4)
    with pytest.raises(InsufficientTruncation):
        kp_bilinear_residual(v, 4)
    assert kp_bilinear_residual(v, 3) == {}


def test_input_validation():
    with pytest.raises(ValueError):
        kp_bilinear_residual(FockState.vacuum(2), 2)
    with pytest.raises(ValueError):
        kp_bilinear_residual(FockState.vacuum(), -1)
    with pytest.raises(ValueError):
        kp_bilinear_residual(FockState(1, {(FockBasisState((0,), ()),): QRat(1)}), 2)


def test_states_off_the_orbit_are_detected():
    off = FockState.from_partitions({(): QRat(1), (2, 2): QRat(3)})
    residual = kp_bilinear_residual(off, 4)
    assert residual
    assert all(charged_size(x) + charged_size(y) <= 4 for x, y in residual)


def test_perturbed_generating_state_is_detected():
    v = one_leg_generating_state(0, 5)
    bump = FockState.from_partitions({(2, 1): inverse_bracket(2)})
    bump.exact_size = None
    perturbed = v + bump
    perturbed.exact_size = 5
    assert kp_bilinear_residual(perturbed, 4)


def test_low_rank_sums_stay_on_the_orbit():
    # both excitations share the hole at -1/2, so this is exp of a fermion bilinear on the vacuum
    v = FockState.from_partitions({(): QRat(1), (1,): QRat(1), (2,): QRat(1)})
    assert kp_bilinear_residual(v, 4) == {}
