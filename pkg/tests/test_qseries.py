import json
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import sympy_equal, to_sympy
from topvertex.qseries import (
    EXACT,
    LaurentPoly,
    PointField,
    QRat,
    VanishingDenominator,
    arith,
    bracket,
    bracket_factorial,
    eval_at,
    inverse_bracket,
    inverse_bracket_factorial,
    invert_q,
    q_power,
    qsum,
    t_power,
)

coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
laurent = st.dictionaries(st.integers(-30, 30), coeff, max_size=5).map(LaurentPoly)


@st.composite
def qrats(draw):
    """Values built along several routes: raw fractions, brackets, sums, quotients."""
    kind = draw(st.integers(0, 3))
    if kind == 0:
        num = draw(laurent)
        den = draw(laurent)
        assume(not den.is_zero())
        return QRat.from_fraction(num, den)
    if kind == 1:
        n = draw(st.integers(1, 5))
        return inverse_bracket(n) * draw(coeff) + t_power(draw(st.integers(-24, 24)))
    if kind == 2:
        return bracket(draw(st.integers(-4, 4))) * t_power(draw(st.integers(-12, 12))) + QRat(draw(coeff))
    a = QRat.from_laurent(draw(laurent))
    b = QRat.from_laurent(draw(laurent)) + bracket(draw(st.integers(1, 3)))
    assume(b)
    return a / b


points = st.fractions(min_value=-7, max_value=7, max_denominator=7).filter(lambda x: x and abs(x) != 1)


# examples -----------------------------------------------------------------


def test_add_zero_is_identity():
    x = inverse_bracket(3) + t_power(5)
    assert arith(QRat(0), x, "add") == x


def test_half_powers_multiply_to_q():
    assert arith(q_power(Fraction(1, 2)), q_power(Fraction(1, 2)), "mul") == t_power(24)


def test_division_cancels_common_factor():
    q, h = q_power(1), q_power(Fraction(1, 2))
    assert arith(q - 1, h - 1, "div") == h + 1


def test_division_by_zero_is_an_error():
    with pytest.raises(ZeroDivisionError):
        arith(QRat(1), QRat(0), "div")
    with pytest.raises(ValueError):
        arith(QRat(1), QRat(1), "pow")


def test_bracket_values():
    assert bracket(0) == 0
    assert bracket(1) == t_power(12) - t_power(-12)
    for n in range(1, 7):
        assert bracket(-n) == -bracket(n)
        assert inverse_bracket(n) * bracket(n) == 1


def test_bracket_factorial():
    assert bracket_factorial(0) == 1
    assert bracket_factorial(1) == bracket(1)
    assert bracket_factorial(3) == bracket(1) * bracket(2) * bracket(3)
    assert inverse_bracket_factorial(4) * bracket_factorial(4) == 1
    with pytest.raises(ValueError):
        bracket_factorial(-1)


def test_invert_q_examples():
    assert invert_q(q_power(Fraction(1, 2))) == q_power(Fraction(-1, 2))
    for n in range(6):
        assert invert_q(bracket(n)) == -bracket(n)


def test_eval_at_examples():
    assert eval_at(q_power(1), 2) == 2**24
    assert eval_at(bracket(2), 1) == 0
    with pytest.raises(VanishingDenominator):
        eval_at(inverse_bracket(2), 1)
    with pytest.raises(VanishingDenominator):
        eval_at(QRat(1), 0)


def test_canonical_denominator_shape():
    x = (t_power(5) + 3) / (t_power(7) * 2 - t_power(31) * 4)
    d = x.denominator
    assert d.min_exp() == 0 and d.terms[0] > 0
    assert all(c for c in d.terms.values())
    assert LaurentPoly({3: 0, 4: 1}).terms == {4: 1}


def test_string_form():
    assert str(inverse_bracket(1)) == "(-q^(1/2))/(1 - q)"
    assert str(QRat(0)) == "0"


# properties ---------------------------------------------------------------


@settings(max_examples=20)
@given(qrats(), qrats())
def test_matches_sympy_arithmetic(a, b):
    sa, sb = to_sympy(a), to_sympy(b)
    assert sympy_equal(to_sympy(a + b), sa + sb)
    assert sympy_equal(to_sympy(a * b), sa * sb)
    if b:
        assert sympy_equal(to_sympy(a / b), sa / sb)


@settings(max_examples=20)
@given(qrats(), qrats(), qrats())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0


@given(qrats(), qrats())
def test_representation_is_unique(a, b):
    assume(b)
    routes = [(a * b) / b, a + b - b, qsum([a, b, -b]), -(-a)]
    keys = {r.canonical_key() for r in routes}
    assert keys == {a.canonical_key()}
    assert len({hash(r) for r in routes}) == 1


@given(qrats(), qrats(), points)
def test_eval_is_a_homomorphism(a, b, t0):
    try:
        va, vb = eval_at(a, t0), eval_at(b, t0)
    except VanishingDenominator:
        return
    assert eval_at(a * b, t0) == va * vb
    assert eval_at(a + b, t0) == va + vb


@given(qrats(), qrats())
def test_invert_q_is_an_involutive_automorphism(a, b):
    assert invert_q(invert_q(a)) == a
    assert invert_q(a * b) == invert_q(a) * invert_q(b)
    assert invert_q(a + b) == invert_q(a) + invert_q(b)


@given(qrats(), points)
def test_invert_q_evaluates_at_reciprocal(a, t0):
    try:
        v = eval_at(a, 1 / t0)
    except VanishingDenominator:
        return
    assert eval_at(invert_q(a), t0) == v


@given(qrats())
def test_json_round_trip(a):
    data = json.loads(json.dumps(a.to_json()))
    b = QRat.from_json(data)
    assert b == a and b.canonical_key() == a.canonical_key()


def test_json_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        QRat.from_json({"num": [[0, "1/1"]], "den": []})


@given(qrats(), points)
def test_point_field_tracks_exact_field(a, t0):
    pf = PointField(t0)
    try:
        v = pf.lift(a)
    except VanishingDenominator:
        return
    assert pf.lift(a * a) == v * v
    for n in range(1, 4):
        assert pf.inverse_bracket_factorial(n) == eval_at(EXACT.inverse_bracket_factorial(n), t0)
    assert pf.flip(lambda f: f.tpow(5)) == eval_at(EXACT.flip(lambda f: f.tpow(5)), t0)


def test_point_field_rejects_roots_of_unity():
    for bad in (0, 1, -1):
        with pytest.raises(ValueError):
            PointField(Fraction(bad))
