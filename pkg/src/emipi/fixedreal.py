"""Signed fixed-point decimals with explicit working precision.

A FixedReal stores an arbitrary-size integer mantissa together with a
non-negative decimal scale; the represented value is mantissa * 10**-scale.
Addition and subtraction are exact at the wider of the two scales.
Multiplication, division and square root round once, half-to-even, at the
working scale ``digits + guard`` carried by a Precision object. Everything
is immutable, so values can be shared freely between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, InsufficientScale, NegativeOperand


def round_half_even(num: int, den: int) -> int:
    """Nearest integer to num/den, ties to even. den must be positive."""
    q, r = divmod(num, den)
    twice = 2 * r
    if twice > den or (twice == den and q & 1):
        q += 1
    return q


def default_guard(digits: int, terms: int = 0) -> int:
    """Guard-digit budget for a result of the given size.

    ``terms`` is the number of summation steps whose rounding the guard has
    to absorb; zero covers plain arithmetic.
    """
    g = 10 + math.ceil(math.log10(terms + 1)) + math.ceil(math.log10(digits + 1))
    return max(10, g)


@dataclass(frozen=True, slots=True)
class Precision:
    """Requested correct digits plus extra working digits.

    ``guard=0`` selects the default budget for plain arithmetic; use
    :meth:`for_terms` when a long summation is planned.
    """

    digits: int
    guard: int = 0

    def __post_init__(self) -> None:
        if self.digits < 1:
            raise ValueError("digits must be >= 1")
        if self.guard == 0:
            object.__setattr__(self, "guard", default_guard(self.digits))
        if self.guard < 10:
            raise ValueError("guard must be >= 10")

    @property
    def workscale(self) -> int:
        return self.digits + self.guard

    @classmethod
    def for_terms(cls, digits: int, terms: int) -> "Precision":
        """Precision whose guard also covers ``terms`` summation steps."""
        return cls(digits, default_guard(digits, terms))


@dataclass(frozen=True, slots=True, eq=False)
class FixedReal:
    """value = mantissa * 10**-scale"""

    mantissa: int
    scale: int = 0

    def __post_init__(self) -> None:
        if self.scale < 0:
            raise ValueError("scale must be >= 0")

    # ---------------------------------------------------------------- build
    @classmethod
    def from_str(cls, text: str) -> "FixedReal":
        """Parse a plain decimal string, optionally with an e-exponent."""
        s = text.strip()
        exp = 0
        for marker in ("e", "E"):
            if marker in s:
                s, _, tail = s.partition(marker)
                exp = int(tail)
                break
        sign = 1
        if s.startswith(("+", "-")):
            if s[0] == "-":
                sign = -1
            s = s[1:]
        whole, _, frac = s.partition(".")
        if not (whole or frac) or not (whole + frac).isdigit():
            raise ValueError(f"not a decimal number: {text!r}")
        mantissa = sign * int((whole or "0") + frac)
        scale = len(frac) - exp
        if scale < 0:
            mantissa *= 10 ** (-scale)
            scale = 0
        return cls(mantissa, scale)

    @classmethod
    def from_fraction(cls, value: Fraction, scale: int) -> "FixedReal":
        """Round an exact rational half-to-even onto the 10**-scale lattice."""
        num = value.numerator * 10**scale
        return cls(round_half_even(num, value.denominator), scale)

    # ------------------------------------------------------------ conversion
    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 10**self.scale)

    def __float__(self) -> float:
        return float(self.to_fraction())

    def __bool__(self) -> bool:
        return self.mantissa != 0

    def to_decimal(self, places: int) -> str:
        """Exact decimal rendering truncated to ``places`` fractional digits."""
        if places < 0:
            raise ValueError("places must be >= 0")
        if places > self.scale:
            raise InsufficientScale(
                f"value carries {self.scale} fractional digits, {places} requested"
            )
        body = str(abs(self.mantissa) // 10 ** (self.scale - places)).rjust(places + 1, "0")
        sign = "-" if self.mantissa < 0 else ""
        if places == 0:
            return sign + body
        return f"{sign}{body[:-places]}.{body[-places:]}"

    def __str__(self) -> str:
        return self.to_decimal(self.scale)

    # -------------------------------------------------------------- rounding
    def round_to(self, scale: int) -> "FixedReal":
        """Round half-to-even onto a coarser lattice; pad exactly on a finer one."""
        if scale < 0:
            raise ValueError("scale must be >= 0")
        if scale >= self.scale:
            return FixedReal(self.mantissa * 10 ** (scale - self.scale), scale)
        return FixedReal(round_half_even(self.mantissa, 10 ** (self.scale - scale)), scale)

    # ------------------------------------------------------------ arithmetic
    @staticmethod
    def _coerce(other) -> "FixedReal | None":
        if isinstance(other, FixedReal):
            return other
        if isinstance(other, int):
            return FixedReal(other)
        return None

    def _aligned(self, other: "FixedReal") -> tuple[int, int, int]:
        s = max(self.scale, other.scale)
        return (
            self.mantissa * 10 ** (s - self.scale),
            other.mantissa * 10 ** (s - other.scale),
            s,
        )

    def __add__(self, other) -> "FixedReal":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        ma, mb, s = self._aligned(rhs)
        return FixedReal(ma + mb, s)

    __radd__ = __add__

    def __sub__(self, other) -> "FixedReal":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        ma, mb, s = self._aligned(rhs)
        return FixedReal(ma - mb, s)

    def __rsub__(self, other) -> "FixedReal":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs.__sub__(self)

    def __neg__(self) -> "FixedReal":
        return FixedReal(-self.mantissa, self.scale)

    def __abs__(self) -> "FixedReal":
        return FixedReal(abs(self.mantissa), self.scale)

    def __mul__(self, other) -> "FixedReal":
        # exact integer scaling only; use mul() for FixedReal * FixedReal
        if isinstance(other, int):
            return FixedReal(self.mantissa * other, self.scale)
        return NotImplemented

    __rmul__ = __mul__

    def mul(self, other: "FixedReal", prec: Precision) -> "FixedReal":
        """Product rounded half-to-even at the working scale."""
        return FixedReal(
            self.mantissa * other.mantissa, self.scale + other.scale
        ).round_to(prec.workscale)

    def div(self, other: "FixedReal", prec: Precision) -> "FixedReal":
        """Quotient rounded half-to-even at the working scale."""
        if other.mantissa == 0:
            raise DivisionByZero("division by zero")
        num, den = self.mantissa, other.mantissa
        if den < 0:
            num, den = -num, -den
        shift = prec.workscale + other.scale - self.scale
        if shift >= 0:
            num *= 10**shift
        else:
            den *= 10 ** (-shift)
        return FixedReal(round_half_even(num, den), prec.workscale)

    def sqrt(self, prec: Precision) -> "FixedReal":
        """Square root via exact integer sqrt, correctly rounded.

        The result carries a few digits beyond the working scale so that
        r*r stays within 10**-(workscale - 2) of the operand even for
        operands much larger than one.
        """
        if self.mantissa < 0:
            raise NegativeOperand("square root of a negative value")
        int_digits = max(0, len(str(self.mantissa)) - self.scale)
        target = prec.workscale + 4 + int_digits
        if self.mantissa == 0:
            return FixedReal(0, target)
        shift = 2 * target - self.scale
        if shift >= 0:
            n = self.mantissa * 10**shift
        else:
            n = round_half_even(self.mantissa, 10 ** (-shift))
        r = math.isqrt(n)
        if n - r * r > r:
            r += 1
        return FixedReal(r, target)

    # ------------------------------------------------------------ comparison
    def _cmp(self, other) -> int:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        ma, mb, _ = self._aligned(rhs)
        return (ma > mb) - (ma < mb)

    def __eq__(self, other) -> bool:
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c == 0

    def __lt__(self, other) -> bool:
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other) -> bool:
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other) -> bool:
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other) -> bool:
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __hash__(self) -> int:
        m, s = self.mantissa, self.scale
        while s > 0 and m % 10 == 0:
            m //= 10
            s -= 1
        return hash((m, s))


def floor_log10(x: FixedReal) -> int:
    """Largest e with 10**e <= |x|; x must be nonzero."""
    if x.mantissa == 0:
        raise ValueError("floor_log10 of zero")
    return len(str(abs(x.mantissa))) - 1 - x.scale


def leading_zero_count(x: FixedReal) -> int:
    """floor(-log10 |x|): how many correct digits an error of |x| leaves."""
    digits = str(abs(x.mantissa))
    count = x.scale - len(digits)
    if digits == "1" + "0" * (len(digits) - 1):
        count += 1
    return count


def to_scientific(x: FixedReal, sig: int = 20) -> str:
    """Deterministic scientific rendering, ``sig`` significant digits, truncated."""
    if x.mantissa == 0:
        return "0e+0"
    if sig < 1:
        raise ValueError("sig must be >= 1")
    digits = str(abs(x.mantissa))
    exponent = len(digits) - 1 - x.scale
    digits = (digits + "0" * sig)[:sig]
    sign = "-" if x.mantissa < 0 else ""
    body = digits[0] + ("." + digits[1:] if len(digits) > 1 else "")
    return f"{sign}{body}e{exponent:+d}"
