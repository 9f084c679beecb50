"""Exact double-angle stepping on the unit circle."""

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from emipi import BigRational, double_angle_step


def test_fixed_points_and_quarter_turn():
    assert double_angle_step(Fraction(0), Fraction(1)) == (Fraction(0), Fraction(1))
    assert double_angle_step(Fraction(1), Fraction(0)) == (Fraction(0), Fraction(-1))


def test_three_four_five_triangle():
    s, c = double_angle_step(Fraction(3, 5), Fraction(4, 5))
    assert (s, c) == (Fraction(24, 25), Fraction(7, 25))
    assert s * s + c * c == 1


def test_unit_identity_thirty_chained_from_axis():
    s, c = Fraction(1), Fraction(0)
    for _ in range(30):
        s, c = double_angle_step(s, c)
        assert s * s + c * c == 1


def test_unit_identity_chained_from_pythagorean_start():
    # denominators square every step (5^(2^n)), so a generic start is only
    # feasible for a limited chain; 15 steps is ~23k digits
    s, c = Fraction(3, 5), Fraction(4, 5)
    for _ in range(15):
        s, c = double_angle_step(s, c)
        assert s * s + c * c == 1
    assert len(str(s.denominator)) > 20_000


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_normalization_invariants(a, b):
    # BigRational is fractions.Fraction: lowest terms, positive denominator
    if b == 0:
        return
    q = BigRational(a, b) + BigRational(1, 7) * BigRational(-3, 11)
    assert q.denominator > 0
    from math import gcd

    assert gcd(q.numerator, q.denominator) == 1


def test_scaled_pythagorean_triples_stay_on_circle():
    # (2pq, p^2-q^2, p^2+q^2) seeds, a few doublings each
    for p, q in [(2, 1), (3, 2), (5, 2), (7, 4)]:
        s = Fraction(2 * p * q, p * p + q * q)
        c = Fraction(p * p - q * q, p * p + q * q)
        for _ in range(6):
            s, c = double_angle_step(s, c)
            assert s * s + c * c == 1
