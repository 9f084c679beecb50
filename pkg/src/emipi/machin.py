"""Two-term arctangent identities for pi.

Pipeline: the nested radical chain a_0 = 0, a_{k+1} = sqrt(2 + a_k) fixes a
large integer (or decimal-lattice) gamma with 2^(k-1)/gamma close to pi/4;
the residual argument r making

    pi/4 = 2^(k-1) * arctan(1/gamma) + arctan(r)

is then computed from the exact starting pair sin t = 2g/(g^2+1),
cos t = (g^2-1)/(g^2+1) for t = arctan(2g/(g^2-1)) by k-1 double-angle
steps, either as an exact rational (desk scale only: digit counts double
per step) or in fixed point with an inflated guard.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import AmbiguousRounding, DigitCapExceeded
from .fixedreal import FixedReal, Precision, default_guard, leading_zero_count
from .series import atan_emi, terms_for_digits


@dataclass(frozen=True, slots=True)
class NestedRadicalPair:
    """a_{k-1} and a_k from the sqrt(2 + .) chain."""

    k: int
    a_prev: FixedReal
    a_curr: FixedReal


def nested_radical(k: int, prec: Precision) -> NestedRadicalPair:
    """Iterate a_{j+1} = sqrt(2 + a_j) from a_0 = 0, k times."""
    if k < 1:
        raise ValueError("k must be >= 1")
    a_prev = FixedReal(0)
    a_curr = (a_prev + FixedReal(2)).sqrt(prec)
    for _ in range(k - 1):
        a_prev, a_curr = a_curr, (a_curr + FixedReal(2)).sqrt(prec)
    return NestedRadicalPair(k, a_prev, a_curr)


def _lattice_floor(value: FixedReal, guard: int, mode: str) -> int:
    """Floor or ceiling of a positive value, refusing to guess inside noise.

    The fractional part must sit at least 10 * 10**-guard away from both
    lattice points; otherwise the computed digits cannot justify the choice.
    """
    power = 10**value.scale
    ip, rem = divmod(value.mantissa, power)
    tol = 10 ** (value.scale - guard + 1)
    if rem < tol or power - rem < tol:
        raise AmbiguousRounding(
            "fractional part within guard-digit noise of an integer; raise the precision"
        )
    return ip if mode == "floor" else ip + 1


def gamma_select(k: int, grain: int, mode: str, prec: Precision) -> Fraction:
    """Choose gamma near a_k/sqrt(2 - a_{k-1}) on the 10**-grain lattice.

    grain = 0 with mode "floor" gives the plain integer choice. The
    subtraction 2 - a_{k-1} cancels roughly 0.6*(k+1) digits, so large k
    needs correspondingly more working digits.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if grain < 0:
        raise ValueError("grain must be >= 0")
    if mode not in ("floor", "ceil"):
        raise ValueError("mode must be 'floor' or 'ceil'")
    pair = nested_radical(k, prec)
    root = (FixedReal(2) - pair.a_prev).sqrt(prec)
    ratio = pair.a_curr.div(root, prec)
    chosen = _lattice_floor(ratio * 10**grain, prec.guard, mode)
    return Fraction(chosen, 10**grain)


def quarter_pi_residual(
    k: int, gamma: Fraction, pi_value: FixedReal, prec: Precision
) -> FixedReal:
    """2^(k-1)/gamma - pi/4; small by construction of gamma."""
    lead = FixedReal.from_fraction(Fraction(2 ** (k - 1)) / gamma, prec.workscale)
    return lead - pi_value.div(FixedReal(4), prec)


def _digit_length(value: int) -> int:
    # cheap decimal-digit estimate from the bit length, within one digit
    return 1 if value == 0 else (abs(value).bit_length() * 30103) // 100000 + 1


def second_argument_exact(
    k: int, gamma: Fraction, digit_cap: int = 1_000_000
) -> Fraction:
    """Exact residual argument (1 - sin)/cos after k-1 double-angle steps.

    sin and cos are carried as integer numerators over one common power of
    gamma^2 + 1, which is the double-angle map without intermediate
    normalization; the single reduction happens in the returned Fraction.
    Digit counts double every step, so the budget is checked up front and
    before each squaring. digit_cap is approximate (bit-length based).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if gamma <= 1:
        raise ValueError("gamma must be > 1")
    p, q = gamma.numerator, gamma.denominator
    den = p * p + q * q
    projected = _digit_length(den) << (k - 1)
    if projected > digit_cap:
        raise DigitCapExceeded(
            f"exact residual for k={k} needs about {projected} digits, cap is {digit_cap}"
        )
    sin_num = 2 * p * q
    cos_num = p * p - q * q
    for _ in range(k - 1):
        if 2 * _digit_length(den) > digit_cap:
            raise DigitCapExceeded(
                f"denominator passed {digit_cap} digits during doubling"
            )
        sin_num, cos_num, den = (
            2 * sin_num * cos_num,
            (cos_num - sin_num) * (cos_num + sin_num),
            den * den,
        )
    return Fraction(den - sin_num, cos_num)


def second_argument_fixed(k: int, gamma: Fraction, prec: Precision) -> FixedReal:
    """Residual argument by fixed-point double-angle recursion.

    The guard is inflated by 2k digits: every doubling can cost about one
    digit of angle accuracy, and the final (1 - sin)/cos loses more to
    cancellation, since sin approaches 1 and cos approaches 0.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if gamma <= 1:
        raise ValueError("gamma must be > 1")
    work = Precision(prec.digits, prec.guard + 2 * k)
    w = work.workscale
    p, q = gamma.numerator, gamma.denominator
    den = p * p + q * q
    s = FixedReal.from_fraction(Fraction(2 * p * q, den), w)
    c = FixedReal.from_fraction(Fraction(p * p - q * q, den), w)
    for _ in range(k - 1):
        s, c = s.mul(c, work) * 2, c.mul(c, work) - s.mul(s, work)
    return (FixedReal(1) - s).div(c, work).round_to(prec.workscale)


@dataclass(frozen=True, slots=True)
class MachinTwoTerm:
    """pi/4 = 2^(k-1) * arctan(1/gamma) + arctan(second argument)."""

    k: int
    gamma: Fraction
    second_exact: Fraction | None
    second_fixed: FixedReal
    digits: int

    @property
    def lead_coefficient(self) -> int:
        return 2 ** (self.k - 1)


def build_two_term(
    k: int,
    prec: Precision,
    mode: str = "floor",
    grain: int = 0,
    digit_cap: int = 1_000_000,
    require_exact: bool = False,
) -> MachinTwoTerm:
    """Select gamma and compute the residual argument, exactly when it fits.

    With require_exact the digit-cap failure propagates instead of falling
    back to the fixed-point route.
    """
    gamma = gamma_select(k, grain, mode, prec)
    try:
        exact = second_argument_exact(k, gamma, digit_cap)
    except DigitCapExceeded:
        if require_exact:
            raise
        exact = None
    if exact is not None:
        fixed = FixedReal.from_fraction(exact, prec.workscale)
    else:
        fixed = second_argument_fixed(k, gamma, prec)
    return MachinTwoTerm(k, gamma, exact, fixed, prec.digits)


def auto_terms(formula: MachinTwoTerm, M: int, prec: Precision) -> int:
    """n_max covering the working scale for both arctangent arguments."""
    w = prec.workscale
    lead = FixedReal.from_fraction(1 / formula.gamma, w)
    return max(
        terms_for_digits(lead, M, w),
        terms_for_digits(formula.second_fixed, M, w),
    )


def machin_eval(formula: MachinTwoTerm, M: int, n_max: int, prec: Precision) -> FixedReal:
    """Evaluate 4 * (2^(k-1) arctan(1/gamma) + arctan(second)) as a pi approximant."""
    w = prec.workscale
    lead_arg = FixedReal.from_fraction(1 / formula.gamma, w)
    if formula.second_exact is not None:
        second_arg = FixedReal.from_fraction(formula.second_exact, w)
    else:
        second_arg = formula.second_fixed
    first = atan_emi(lead_arg, M, n_max, prec).value * formula.lead_coefficient
    second = atan_emi(second_arg, M, n_max, prec).value
    return (first + second) * 4


def digit_gain_profile(
    formula: MachinTwoTerm,
    M: int,
    n_lo: int,
    n_hi: int,
    prec: Precision,
    pi_reference: FixedReal,
) -> list[tuple[int, int]]:
    """(n_max, correct digits of pi) for each truncation in [n_lo, n_hi].

    The reference must carry at least the working scale; entries whose error
    has sunk into the guard-digit floor are dropped rather than reported.
    """
    if pi_reference.scale < prec.workscale:
        raise ValueError("pi reference carries fewer digits than the working scale")
    ref = pi_reference.round_to(prec.workscale)
    noise_floor = FixedReal(10**6, prec.workscale)  # 10^-(workscale - 6)
    out: list[tuple[int, int]] = []
    for n in range(n_lo, n_hi + 1):
        err = abs(machin_eval(formula, M, n, prec) - ref)
        if err.mantissa == 0 or err < noise_floor:
            break
        out.append((n, leading_zero_count(err)))
    return out


def binomial_pi_series(m_max: int, prec: Precision) -> FixedReal:
    """Binomial double-sum approximant of pi (validation series).

    Every outer term is an exact rational, so the truncated sum is carried
    in Fraction arithmetic and rounded once at the end.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    total = Fraction(0)
    for m in range(1, m_max + 1):
        inner = sum(
            (-4) ** (n - 1) * math.comb(2 * m - 1, 2 * n - 1) for n in range(1, m + 1)
        )
        total += Fraction(inner, (2 * m - 1) * 5 ** (2 * m - 1))
    return FixedReal.from_fraction(16 * total, prec.workscale)


def format_record(formula: MachinTwoTerm) -> str:
    """One-line ASCII record for persistence and fixtures."""
    if formula.second_exact is not None:
        second = f"{formula.second_exact.numerator}/{formula.second_exact.denominator}"
    else:
        second = f"fixed:{formula.second_fixed}"
    gamma = formula.gamma
    return (
        f"k={formula.k} gamma={gamma.numerator}/{gamma.denominator} "
        f"second_arg={second} digits={formula.digits}"
    )


def parse_record(line: str) -> MachinTwoTerm:
    """Inverse of :func:`format_record`."""
    fields = dict(part.split("=", 1) for part in line.split())
    k = int(fields["k"])
    digits = int(fields["digits"])
    num, _, den = fields["gamma"].partition("/")
    gamma = Fraction(int(num), int(den or "1"))
    raw = fields["second_arg"]
    if raw.startswith("fixed:"):
        exact = None
        fixed = FixedReal.from_str(raw[len("fixed:"):])
    else:
        num, _, den = raw.partition("/")
        exact = Fraction(int(num), int(den or "1"))
        fixed = FixedReal.from_fraction(exact, digits + default_guard(digits))
    return MachinTwoTerm(k, gamma, exact, fixed, digits)
