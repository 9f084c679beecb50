"""Series engines against hand values and the complex closed form.

Oracles, in decreasing strength:
  * exact hand-evaluated iteration steps (rational arithmetic)
  * the closed form alpha_n + i*beta_n = i*(1 - i/u)^(2n-1), float64
  * the complex-power evaluator atan_complex_oracle, float64
  * reference_atan (range-reduced, self-checked against pi)
"""

import random
from fractions import Fraction

import pytest

from emipi import (
    FixedReal,
    GammaArg,
    Precision,
    SeriesKind,
    ZeroArgument,
    alpha_beta_init,
    alpha_beta_step,
    atan_complex_oracle,
    atan_emi,
    atan_emi_m1,
    atan_euler,
    atan_maclaurin,
    atan_to_precision,
    log10_fixed,
    reference_atan,
    self_check_pi,
    terms_for_digits,
)

P30 = Precision(30)
P50 = Precision(50)


def closed_form(u: float, n: int) -> complex:
    """alpha_n + i*beta_n for the iteration at xt = u."""
    return 1j * (1 - 1j / u) ** (2 * n - 1)


def quarter_pi(digits: int) -> FixedReal:
    prec = Precision(digits)
    return self_check_pi(digits + 5).div(FixedReal(4), prec)


# ------------------------------------------------------------------ iteration


def test_init_examples():
    s = alpha_beta_init(FixedReal(2), FixedReal(5, 1), P30)
    assert s.alpha == FixedReal(1) and s.beta == FixedReal(1) and s.n == 1

    s = alpha_beta_init(FixedReal(1), FixedReal(5, 1), P30)
    assert s.alpha == FixedReal(2)  # matches the M = 1 start 2/x at x = 1

    s = alpha_beta_init(FixedReal(4), FixedReal(5, 1), P30)
    assert s.alpha == FixedReal.from_str("0.5")

    with pytest.raises(ZeroArgument):
        alpha_beta_init(FixedReal(0), FixedReal(5, 1), P30)


def test_step_hand_values_xt_one():
    s = alpha_beta_init(FixedReal(2), FixedReal(5, 1), P30)  # xt = 1
    s = alpha_beta_step(s, P30)
    assert s.n == 2
    assert s.alpha == FixedReal(2) and s.beta == FixedReal(-2)


def test_step_hand_values_xt_two():
    s = alpha_beta_init(FixedReal(4), FixedReal(5, 1), P30)  # xt = 2
    s = alpha_beta_step(s, P30)
    assert s.alpha == FixedReal.from_fraction(Fraction(11, 8), P30.workscale)
    assert s.beta == FixedReal.from_fraction(Fraction(1, 4), P30.workscale)


@pytest.mark.parametrize("x,t", [(1.0, 0.5), (2.0, 0.5), (0.5, 0.3), (-3.0, 0.7), (10.0, 0.1)])
def test_iteration_matches_closed_form(x, t):
    u = x * t
    prec = Precision(25)
    s = alpha_beta_init(FixedReal.from_str(repr(x)), FixedReal.from_str(repr(t)), prec)
    for n in range(1, 21):
        z = closed_form(u, n)
        scale = max(abs(z.real), abs(z.imag), 1.0)
        assert abs(float(s.alpha) - z.real) <= 1e-10 * scale
        assert abs(float(s.beta) - z.imag) <= 1e-10 * scale
        s = alpha_beta_step(s, prec)


def test_gamma_arg():
    g = GammaArg(2, 3)
    assert g.exact == Fraction(1, 2)
    v = GammaArg(1, 3).value(P30)
    assert v == FixedReal.from_fraction(Fraction(1, 6), P30.workscale)
    assert FixedReal(0) < v < FixedReal(1)
    with pytest.raises(ValueError):
        GammaArg(4, 3)


# ----------------------------------------------------------------- main sum


def test_zero_short_circuit():
    r = atan_emi(FixedReal(0), 3, 10, P30)
    assert r.value == FixedReal(0)
    assert r.terms_used == 10 and r.kind is SeriesKind.EMI


def test_arctan_one_converges_to_quarter_pi():
    prec = Precision(100)
    value = atan_emi(FixedReal(1), 1, 200, prec).value
    assert abs(value - quarter_pi(100)) < FixedReal(1, 100)


def test_m1_reduction_is_bit_identical():
    rng = random.Random(808)
    for _ in range(100):
        x = FixedReal(rng.randint(-20 * 10**8, 20 * 10**8), 8)
        if x.mantissa == 0:
            continue
        a = atan_emi(x, 1, 12, P50).value
        b = atan_emi_m1(x, 12, P50).value
        assert a.mantissa == b.mantissa and a.scale == b.scale


def test_odd_symmetry_is_exact():
    rng = random.Random(909)
    for _ in range(25):
        x = FixedReal(rng.randint(1, 10**10), rng.randint(0, 6))
        for M in (1, 3):
            pos = atan_emi(x, M, 9, P30).value
            neg = atan_emi(-x, M, 9, P30).value
            assert neg == -pos and neg.mantissa == -pos.mantissa


def test_matches_complex_oracle_spot_grid():
    for x in (1.0, -1.0, 5.0, -5.0, 0.3):
        for M in (1, 2, 3):
            mine = float(atan_emi(FixedReal.from_str(repr(x)), M, 8, P30).value)
            assert abs(mine - atan_complex_oracle(x, M, 8)) < 1e-12


def test_emi_m1_ten_terms_near_quarter_pi():
    err = abs(atan_emi_m1(FixedReal(1), 10, P30).value - quarter_pi(30))
    assert err < FixedReal(1, 7)


# ---------------------------------------------------------------- baselines


def test_maclaurin_leibniz_partial_sum():
    got = atan_maclaurin(FixedReal(1), 3, P30).value
    want = FixedReal.from_fraction(Fraction(76, 105), P30.workscale)
    assert abs(got - want) < FixedReal(5, P30.workscale - 1)
    assert atan_maclaurin(FixedReal(0), 5, P30).value == FixedReal(0)


def test_maclaurin_interior_accuracy():
    prec = Precision(20)
    got = atan_maclaurin(FixedReal(5, 1), 40, prec).value
    assert abs(got - reference_atan(FixedReal(5, 1), 40)) < FixedReal(1, 12)


def test_maclaurin_diverges_while_emi_converges():
    assert abs(atan_maclaurin(FixedReal(2), 40, Precision(40)).value) > FixedReal(10**6)
    err = abs(atan_emi(FixedReal(2), 1, 40, Precision(40)).value - reference_atan(FixedReal(2), 60))
    assert err < FixedReal(1, 13)


def test_euler_first_terms():
    assert atan_euler(FixedReal(0), 7, P30).value == FixedReal(0)
    half = atan_euler(FixedReal(1), 0, P30).value
    assert half == FixedReal.from_str("0.5")


def test_euler_coefficients_match_factorials():
    import math

    c = Fraction(1)
    for n in range(11):
        direct = Fraction(2 ** (2 * n) * math.factorial(n) ** 2, math.factorial(2 * n + 1))
        assert c == direct
        c *= Fraction(2 * (n + 1), 2 * n + 3)


def test_euler_slower_than_subinterval_series_at_one():
    ref = quarter_pi(40)
    e_euler = abs(atan_euler(FixedReal(1), 10, Precision(40)).value - ref)
    e_emi = abs(atan_emi(FixedReal(1), 1, 10, Precision(40)).value - ref)
    assert e_emi < e_euler


# ------------------------------------------------------------- decay in n, M


def test_error_decay_in_n_at_one():
    # decay is geometric at ~0.2 per term on average; the phase factor makes
    # single steps non-monotone, so windows are asserted instead
    ref = reference_atan(FixedReal(1), 100)
    errors = [
        abs(atan_emi(FixedReal(1), 1, n, Precision(80)).value - ref).to_fraction()
        for n in range(1, 31)
    ]
    assert all(errors[i + 3] < errors[i] * Fraction(1, 10) for i in range(27))
    geometric_mean = (errors[29] / errors[4]) ** Fraction(1, 25)
    assert Fraction(15, 100) < geometric_mean < Fraction(25, 100)
    assert errors[29] < Fraction(1, 10**22)


def test_error_decay_in_m():
    # strict decrease at x = 10; the per-step improvement there is 5-10x,
    # reaching 100x per step only for small arguments such as x = 1
    for x, per_step in ((FixedReal(10), 1), (FixedReal(1), 100)):
        ref = reference_atan(x, 70)
        errors = [
            abs(atan_emi(x, M, 10, Precision(60)).value - ref).to_fraction()
            for M in range(1, 6)
        ]
        for lo, hi in zip(errors[1:], errors):
            assert lo * per_step < hi
    assert errors[0] / errors[4] > 1000  # x = 1 total sweep
    ref10 = reference_atan(FixedReal(10), 70)
    e10 = [
        abs(atan_emi(FixedReal(10), M, 10, Precision(60)).value - ref10).to_fraction()
        for M in range(1, 6)
    ]
    assert e10[0] / e10[4] > 1000


def test_small_argument_digit_rate():
    # per-term gain should track -log10((x/2)^2) = 8.6 within one digit
    x = FixedReal.from_str("1e-4")
    ref = reference_atan(x, 110)
    prev = None
    for n in range(1, 7):
        err = abs(atan_emi(x, 1, n, Precision(90)).value - ref)
        if prev is not None:
            gain = log10_fixed(prev) - log10_fixed(err)
            assert 7.6 <= gain <= 9.6
        prev = err


# ------------------------------------------------------------------ wrappers


def test_terms_for_digits_reaches_target():
    for text in ("0.3", "1", "3.7"):
        x = FixedReal.from_str(text)
        n = terms_for_digits(x, 1, 40)
        err = abs(atan_emi(x, 1, n, Precision(40, 15)).value - reference_atan(x, 70))
        assert err < FixedReal(1, 40)


def test_atan_to_precision():
    x = FixedReal.from_str("0.8")
    prec = Precision(45)
    got = atan_to_precision(x, prec)
    assert abs(got.value - reference_atan(x, 70)) < FixedReal(1, 45)
    assert got.terms_used == terms_for_digits(x, 1, prec.workscale)


def test_complex_oracle_odd_symmetry_and_m1_match():
    assert atan_complex_oracle(-1.0, 1, 10) == -atan_complex_oracle(1.0, 1, 10)
    mine = float(atan_emi_m1(FixedReal(1), 10, P30).value)
    assert abs(mine - atan_complex_oracle(1.0, 1, 10)) < 1e-13
