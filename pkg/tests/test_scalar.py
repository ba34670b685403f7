import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import nonzero_rationals, rationals, scalars, sp_p, sp_q, to_sympy
from pqrs.errors import HalfPowerOfNonSquare, NotDivisible, ZeroBaseNegativeExponent
from pqrs.scalar import (
    ONE,
    ZERO,
    P,
    Q,
    Scalar,
    format_scalar,
    rational_sqrt,
    scalar_arith,
    scalar_div_exact,
    scalar_substitute,
    scalar_swap_pq,
)


def test_difference_of_squares():
    assert scalar_arith(P + Q, P - Q, "mul") == P**2 - Q**2


def test_additive_identity():
    assert scalar_arith(P + Q, ZERO, "add") == P + Q
    assert scalar_arith(P + Q, P, "sub") == Q


def test_schoolbook_expansion():
    # expected value expanded by sympy
    expected = sympy.expand((sp_p + sp_q) * (sp_p**2 + sp_p * sp_q + sp_q**2))
    assert expected == sp_p**3 + 2 * sp_p**2 * sp_q + 2 * sp_p * sp_q**2 + sp_q**3
    got = scalar_arith(P + Q, P**2 + P * Q + Q**2, "mul")
    assert got == P**3 + 2 * P**2 * Q + 2 * P * Q**2 + Q**3


def test_unknown_op():
    with pytest.raises(ValueError):
        scalar_arith(P, Q, "div")


def test_canonical_form():
    s = Scalar([((2, 0), 1), ((0, 2), 3), ((2, 0), -1)])
    assert s.terms == (((0, 2), Fraction(3)),)
    assert Scalar([((0, 0), 0)]) == ZERO
    assert [k for k, _ in (Q + P + ONE).terms] == [(0, 0), (0, 2), (2, 0)]


@pytest.mark.parametrize(
    "num, den, quotient",
    [
        (P**2 - Q**2, P - Q, P + Q),
        (P**3 - Q**3, P - Q, P**2 + P * Q + Q**2),
        (P**-1 - Q**-1, P - Q, -(P * Q) ** -1),
        (ONE - Q**-1, ONE - Q, -(Q**-1)),
        (P**4 - Q**4, P**2 + Q**2, P**2 - Q**2),
    ],
)
def test_div_exact_examples(num, den, quotient):
    assert scalar_div_exact(num, den) == quotient
    assert quotient * den == num


def test_div_exact_not_divisible():
    with pytest.raises(NotDivisible):
        scalar_div_exact(P + Q, P - Q)
    with pytest.raises(NotDivisible):
        (P**2 + Q).div_exact(P + Q)
    with pytest.raises(ZeroDivisionError):
        P.div_exact(ZERO)


def test_div_by_monomial_always_succeeds():
    m = Scalar.monomial(Fraction(3, 2), p=-1, q=Fraction(1, 2))
    a = P + 5 * Q**3
    assert (a / m) * m == a


@pytest.mark.parametrize(
    "s, p0, q0, value",
    [
        (P + Q, 2, 3, Fraction(5)),
        (P**2 + P * Q + Q**2, 2, 1, Fraction(7)),
        (P**-1 + Q**-1, 2, 3, Fraction(5, 6)),
    ],
)
def test_substitute_examples(s, p0, q0, value):
    assert scalar_substitute(s, p0, q0) == value


def test_substitute_half_powers():
    half = Scalar.monomial(1, q=Fraction(1, 2))
    assert half.substitute(7, Fraction(9, 4)) == Fraction(3, 2)
    assert Scalar.monomial(1, q=Fraction(-3, 2)).substitute(1, 4) == Fraction(1, 8)
    with pytest.raises(HalfPowerOfNonSquare):
        half.substitute(1, 2)
    with pytest.raises(HalfPowerOfNonSquare):
        half.substitute(1, -4)


def test_substitute_zero_base():
    with pytest.raises(ZeroBaseNegativeExponent):
        (P**-1).substitute(0, 1)
    assert (P**2 + Q).substitute(0, 3) == 3


def test_rational_sqrt():
    assert rational_sqrt(Fraction(49, 16)) == Fraction(7, 4)
    with pytest.raises(HalfPowerOfNonSquare):
        rational_sqrt(Fraction(2))


def test_swap_examples():
    assert scalar_swap_pq(P**2 * Q) == P * Q**2
    assert scalar_swap_pq(P + Q) == P + Q
    n4 = P**3 + P**2 * Q + P * Q**2 + Q**3
    assert scalar_swap_pq(n4) == n4


def test_subs_symbolic_images():
    assert (P**2 * Q).subs(p=Q**-1) == Q**-1
    assert (P + Q).subs(p=1) == 1 + Q
    assert Scalar.monomial(1, p=Fraction(1, 2)).subs(p=Q**2) == Q
    assert Scalar.monomial(1, p=Fraction(1, 2)).subs(p=Q) == Scalar.monomial(1, q=Fraction(1, 2))
    with pytest.raises(HalfPowerOfNonSquare):
        Scalar.monomial(1, p=Fraction(1, 2)).subs(p=Scalar.monomial(1, q=Fraction(1, 2)))
    with pytest.raises(HalfPowerOfNonSquare):
        Scalar.monomial(1, p=Fraction(1, 2)).subs(p=2)


def test_negative_power_requires_monomial():
    assert (2 * P) ** -2 == Scalar.monomial(Fraction(1, 4), p=-2)
    with pytest.raises(NotDivisible):
        (P + Q) ** -1


def test_format():
    assert format_scalar(P**4 + P**3 * Q + 2 * P**2 * Q**2 + P * Q**3 + Q**4) == (
        "p^4 + p^3 q + 2 p^2 q^2 + p q^3 + q^4"
    )
    assert format_scalar(ZERO) == "0"
    assert format_scalar(P**2 - Q**2) == "p^2 - q^2"
    assert format_scalar(-Q**-1) == "-q^-1"
    assert format_scalar(Scalar.monomial(Fraction(-3, 2), q=Fraction(-1, 2)) + 1) == "1 - 3/2 q^(-1/2)"


def test_json_example():
    s = Fraction(1, 3) * P**-1 + Scalar.monomial(-2, q=Fraction(1, 2))
    data = s.to_json()
    assert data == {
        "terms": [
            {"p2": -2, "q2": 0, "num": "1", "den": "3"},
            {"p2": 0, "q2": 1, "num": "-2", "den": "1"},
        ]
    }


def test_json_rejects_duplicates():
    bad = {"terms": [{"p2": 0, "q2": 0, "num": "1", "den": "1"}] * 2}
    with pytest.raises(ValueError):
        Scalar.from_json(bad)


@given(scalars())
def test_json_round_trip(a):
    text = json.dumps(a.to_json())
    back = Scalar.from_json(json.loads(text))
    assert back == a
    assert json.dumps(back.to_json()) == text


@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(scalars(), scalars())
def test_mul_matches_sympy(a, b):
    assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@given(scalars(), scalars().filter(bool))
def test_div_inverts_mul(a, b):
    assert scalar_div_exact(a * b, b) == a


@given(scalars(half=False), scalars(half=False), nonzero_rationals, nonzero_rationals)
def test_substitute_is_homomorphism(a, b, p0, q0):
    assert (a * b).substitute(p0, q0) == a.substitute(p0, q0) * b.substitute(p0, q0)
    assert (a + b).substitute(p0, q0) == a.substitute(p0, q0) + b.substitute(p0, q0)


@given(scalars(), st.sampled_from([Fraction(1, 4), Fraction(9), Fraction(25, 4)]))
def test_substitute_matches_sympy(a, square):
    # sympy evaluates half powers of perfect squares exactly
    expected = to_sympy(a).subs({sp_p: sympy.Rational(square.numerator, square.denominator), sp_q: 4})
    got = a.substitute(square, 4)
    assert sympy.Rational(got.numerator, got.denominator) == expected


@given(scalars(), scalars())
def test_swap_is_involutive_homomorphism(a, b):
    assert a.swap_pq().swap_pq() == a
    assert (a * b).swap_pq() == a.swap_pq() * b.swap_pq()
    assert (a + b).swap_pq() == a.swap_pq() + b.swap_pq()


@settings(max_examples=50)
@given(scalars(), rationals)
def test_scalar_int_promotion(a, r):
    assert a + r == a + Scalar.const(r)
    assert r * a == Scalar.const(r) * a
    assert r - a == Scalar.const(r) - a
