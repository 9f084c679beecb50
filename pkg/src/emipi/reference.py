"""Self-checked pi and reference arctangent values.

pi is computed twice, from two unrelated two-term arctangent identities,
and released only when both runs agree through the requested digits. The
arctangent reference used for error measurement range-reduces arguments
beyond 1 through the checked pi, so a single arithmetic bug cannot
silently certify itself.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import SelfCheckFailed
from .fixedreal import FixedReal, Precision, default_guard, to_scientific
from .series import atan_emi, terms_for_digits

# pi/4 = 4*arctan(1/5) - arctan(1/239)   (Machin)
# pi/4 = 2*arctan(1/2) - arctan(1/7)     (Hermann)
_MACHIN = ((4, Fraction(1, 5)), (-1, Fraction(1, 239)))
_HERMANN = ((2, Fraction(1, 2)), (-1, Fraction(1, 7)))


def _formula_pi(terms: tuple[tuple[int, Fraction], ...], prec: Precision) -> FixedReal:
    total = FixedReal(0, prec.workscale)
    for coeff, argument in terms:
        x = FixedReal.from_fraction(argument, prec.workscale)
        n_max = terms_for_digits(x, 1, prec.workscale)
        total = total + atan_emi(x, 1, n_max, prec).value * (4 * coeff)
    return total


def require_agreement(a: FixedReal, b: FixedReal, digits: int) -> None:
    """Raise unless a and b agree through the first ``digits`` digits."""
    gap = abs(a - b)
    if gap >= FixedReal(1, digits + 2):
        raise SelfCheckFailed(
            f"independent computations differ by {to_scientific(gap, 6)}"
        )
    if a.to_decimal(digits) != b.to_decimal(digits):
        raise SelfCheckFailed(
            "values agree within tolerance but their digit strings split "
            f"inside the first {digits} digits"
        )


@lru_cache(maxsize=None)
def self_check_pi(digits: int, guard: int = 0) -> FixedReal:
    """pi to ``digits`` correct digits, certified by two independent formulas."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    prec = Precision(digits, guard or default_guard(digits, max(10, digits)))
    machin = _formula_pi(_MACHIN, prec)
    hermann = _formula_pi(_HERMANN, prec)
    require_agreement(machin, hermann, digits)
    return machin


def reference_atan(x: FixedReal, digits: int) -> FixedReal:
    """arctan(x) for error measurement.

    |x| <= 1 is summed directly; larger arguments go through
    pi/2 - arctan(1/|x|) so the term count stays near digits per 0.7.
    """
    prec = Precision(digits, default_guard(digits, 4 * digits))
    ax = abs(x)
    if ax <= FixedReal(1):
        value = atan_emi(ax, 1, terms_for_digits(ax, 1, prec.workscale), prec).value
    else:
        inv = FixedReal(1).div(ax, prec)
        half_pi = self_check_pi(prec.workscale).div(FixedReal(2), prec)
        value = half_pi - atan_emi(inv, 1, terms_for_digits(inv, 1, prec.workscale), prec).value
    return -value if x.mantissa < 0 else value
