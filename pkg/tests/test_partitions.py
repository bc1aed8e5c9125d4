import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import schur_poly_at
from topvertex.partitions import (
    FrobeniusCoord,
    conjugate,
    contains,
    contents,
    enumerate_partitions,
    from_frobenius,
    from_json,
    hook,
    hooks,
    kappa,
    lr_coefficient,
    make_partition,
    partitions_up_to,
    subpartitions,
    to_frobenius,
    to_json,
)

UP_TO_12 = partitions_up_to(12)


def count_partitions(n, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        return 1
    return sum(count_partitions(n - k, k) for k in range(1, min(n, cap) + 1))


def test_make_partition_validates():
    assert make_partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(ValueError):
        make_partition([1, 2])
    with pytest.raises(ValueError):
        make_partition([2, -1])


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((3,)) == (1, 1, 1)
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)


@pytest.mark.parametrize("mu", UP_TO_12[::7])
def test_conjugate_is_involutive(mu):
    assert conjugate(conjugate(mu)) == mu
    assert sum(conjugate(mu)) == sum(mu)


def test_frobenius_examples():
    assert to_frobenius((1,)) == FrobeniusCoord((0,), (0,))
    assert to_frobenius((3, 2, 2)) == FrobeniusCoord((2, 0), (2, 1))
    assert to_frobenius(()) == FrobeniusCoord((), ())
    assert str(to_frobenius((3, 2, 2))) == "(2,0|2,1)"


@given(st.integers(0, 8), st.integers(0, 8))
def test_hook_from_frobenius(m, n):
    assert from_frobenius(FrobeniusCoord((m,), (n,))) == (m + 1,) + (1,) * n
    assert hook(m, n) == (m + 1,) + (1,) * n
    mu = hook(m, n)
    assert kappa(mu) == m * (m + 1) - n * (n + 1)
    expected = sorted([m + n + 1, *range(1, m + 1), *range(1, n + 1)], reverse=True)
    assert hooks(mu) == expected


def test_frobenius_validation():
    with pytest.raises(ValueError):
        FrobeniusCoord((1, 2), (1, 0))
    with pytest.raises(ValueError):
        FrobeniusCoord((1,), ())


def test_frobenius_json():
    fc = to_frobenius((4, 3, 3, 1))
    assert FrobeniusCoord.from_json(json.loads(json.dumps(fc.to_json()))) == fc
    assert from_json(json.loads(json.dumps(to_json((3, 2, 2))))) == (3, 2, 2)


def test_kappa_and_hook_examples():
    assert kappa(()) == 0
    assert kappa((2,)) == 2
    assert hooks((1,)) == [1]
    assert hooks((2, 1)) == [3, 1, 1]
    assert contents((2, 1)) == [0, 1, -1]


def test_substrate_invariants_up_to_12():
    for mu in UP_TO_12:
        fc = to_frobenius(mu)
        k = kappa(mu)
        assert k % 2 == 0
        assert k == 2 * sum(contents(mu))
        assert k == sum(m * (m + 1) - n * (n + 1) for m, n in zip(fc.m, fc.n))
        assert kappa(conjugate(mu)) == -k
        assert from_frobenius(fc) == mu
        assert len(hooks(mu)) == sum(mu)


def test_enumeration():
    assert enumerate_partitions(0) == ((),)
    assert enumerate_partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    for n in range(13):
        parts = enumerate_partitions(n)
        assert len(parts) == count_partitions(n)
        assert len(set(parts)) == len(parts)
        assert list(parts) == sorted(parts, reverse=True)
    assert len(enumerate_partitions(10)) == 42
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


def test_subpartitions():
    subs = subpartitions((2, 1))
    assert subs == [(), (1,), (2,), (1, 1), (2, 1)]
    for mu in partitions_up_to(6):
        subs = subpartitions(mu)
        assert all(contains(mu, nu) for nu in subs)
        assert len(subs) == sum(1 for nu in partitions_up_to(sum(mu)) if contains(mu, nu))


def test_lr_examples():
    assert lr_coefficient((), (2, 1), (2, 1)) == 1
    assert lr_coefficient((), (2,), (1, 1)) == 0
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((2,), (1,), (1, 1, 1)) == 0


def test_lr_symmetry_up_to_8():
    for n in range(9):
        for mu in enumerate_partitions(n):
            for k in range(n + 1):
                for nu in enumerate_partitions(k):
                    if not contains(mu, nu):
                        continue
                    for lam in enumerate_partitions(n - k):
                        assert lr_coefficient(nu, lam, mu) == lr_coefficient(lam, nu, mu)


def test_lr_against_bialternant_products():
    """s_nu * s_lam == sum_mu c * s_mu at integer points in up to six variables."""
    points = [2, 3, 5, 7, 11, 13]
    for total in range(7):
        for k in range(total + 1):
            for nu in enumerate_partitions(k):
                for lam in enumerate_partitions(total - k):
                    nvars = min(6, max(len(nu) + len(lam), 1))
                    xs = points[:nvars]
                    lhs = schur_poly_at(nu, xs) * schur_poly_at(lam, xs)
                    rhs = sum(
                        lr_coefficient(nu, lam, mu) * schur_poly_at(mu, xs)
                        for mu in enumerate_partitions(total)
                    )
                    assert lhs == rhs, (nu, lam)


@given(st.lists(st.integers(1, 6), max_size=5))
def test_lr_vanishes_off_support(parts):
    mu = make_partition(sorted(parts, reverse=True))
    for nu in subpartitions(mu):
        for lam in partitions_up_to(max(sum(mu) - sum(nu) - 1, 0)):
            assert lr_coefficient(nu, lam, mu) == 0 or sum(nu) + sum(lam) == sum(mu)
