"""Arctangent series engines.

The central expansion writes arctan(x) as a double sum over subintervals
m = 1..M and term index n = 1..n_max:

    arctan(x) = 2 * sum_m sum_n  1/((2n-1)(2m-1)^(2n-1))
                               * alpha_n / (alpha_n^2 + beta_n^2)

where (alpha_n, beta_n) come from a two-step real iteration at the fixed
product x*t with t = (m - 1/2)/M. The iteration replaces the complex powers
(xt +- i)^-(2n-1), so no surds or complex numbers appear.

Maclaurin and Euler partial sums and a double-precision complex-arithmetic
evaluator are provided as baselines and oracles. Convergence holds for all
real x, but slows as |x|/(2M) grows; raise M or range-reduce for large
arguments.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroArgument
from .fixedreal import FixedReal, Precision

_ONE = FixedReal(1)
_LN10 = math.log(10.0)


class SeriesKind(enum.Enum):
    MACLAURIN = "maclaurin"
    EULER = "euler"
    EMI_M1 = "emi_m1"
    EMI = "emi"
    COMPLEX_ORACLE = "complex_oracle"


@dataclass(frozen=True, slots=True)
class SeriesResult:
    value: FixedReal
    terms_used: int
    kind: SeriesKind


@dataclass(frozen=True, slots=True)
class GammaArg:
    """Subinterval midpoint (m - 1/2)/M, strictly inside (0, 1)."""

    m: int
    M: int

    def __post_init__(self) -> None:
        if not 1 <= self.m <= self.M:
            raise ValueError("need 1 <= m <= M")

    @property
    def exact(self) -> Fraction:
        return Fraction(2 * self.m - 1, 2 * self.M)

    def value(self, prec: Precision) -> FixedReal:
        return FixedReal(2 * self.m - 1).div(FixedReal(2 * self.M), prec)


@dataclass(frozen=True, slots=True)
class AlphaBetaState:
    """Iteration pair (alpha_n, beta_n) for a fixed product xt."""

    alpha: FixedReal
    beta: FixedReal
    n: int
    xt: FixedReal


def alpha_beta_init(x: FixedReal, t: FixedReal, prec: Precision) -> AlphaBetaState:
    """Start the iteration: alpha_1 = 1/(xt), beta_1 = 1."""
    xt = x.mul(t, prec)
    if xt.mantissa == 0:
        raise ZeroArgument("x*t is zero at the working scale")
    return AlphaBetaState(_ONE.div(xt, prec), _ONE.round_to(prec.workscale), 1, xt)


def alpha_beta_step(state: AlphaBetaState, prec: Precision) -> AlphaBetaState:
    """Advance one index.

    Both updates read the previous pair; updating alpha first and feeding it
    into beta would silently corrupt the sequence.
    """
    inv = _ONE.div(state.xt, prec)
    factor = _ONE.round_to(prec.workscale) - inv.mul(inv, prec)
    cross = inv * 2
    alpha = state.alpha.mul(factor, prec) + state.beta.mul(cross, prec)
    beta = state.beta.mul(factor, prec) - state.alpha.mul(cross, prec)
    return AlphaBetaState(alpha, beta, state.n + 1, state.xt)


def atan_emi(
    x: FixedReal,
    M: int,
    n_max: int,
    prec: Precision,
    kind: SeriesKind = SeriesKind.EMI,
) -> SeriesResult:
    """Generalized expansion with M subintervals and n_max terms per subinterval.

    arctan(0) = 0 is returned without touching the iteration. Terms are
    accumulated n inner, m outer ascending; additions at a common scale are
    exact, so the total does not depend on the grouping and a parallel
    per-m evaluation reproduces it bit for bit.
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    w = prec.workscale
    if x.mantissa == 0:
        return SeriesResult(FixedReal(0, w), n_max, kind)
    total = FixedReal(0, w)
    for m in range(1, M + 1):
        state = alpha_beta_init(x, GammaArg(m, M).value(prec), prec)
        odd = 2 * m - 1
        power = odd  # (2m-1)^(2n-1)
        for n in range(1, n_max + 1):
            if n > 1:
                state = alpha_beta_step(state, prec)
                power *= odd * odd
            norm = state.alpha.mul(state.alpha, prec) + state.beta.mul(state.beta, prec)
            total = total + (state.alpha * 2).div(norm * ((2 * n - 1) * power), prec)
    return SeriesResult(total, n_max, kind)


def atan_emi_m1(x: FixedReal, n_max: int, prec: Precision) -> SeriesResult:
    """Single-subinterval form.

    At M = 1 the midpoint is t = 1/2, so the iteration factors reduce to
    (1 - 4/x^2) and 4/x with starting pair (2/x, 1); the evaluation is the
    shared M = 1 chain, which computes exactly those quantities.
    """
    return atan_emi(x, 1, n_max, prec, kind=SeriesKind.EMI_M1)


def atan_maclaurin(x: FixedReal, n_max: int, prec: Precision) -> SeriesResult:
    """Partial Maclaurin sum sum_{n=0..n_max} (-1)^n x^(2n+1)/(2n+1).

    Diverges for |x| > 1; callers exploring that regime get the honest
    partial sums.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    w = prec.workscale
    total = FixedReal(0, w)
    if x.mantissa == 0:
        return SeriesResult(total, n_max, SeriesKind.MACLAURIN)
    xx = x.mul(x, prec)
    power = x.round_to(w)
    for n in range(n_max + 1):
        denom = (2 * n + 1) if n % 2 == 0 else -(2 * n + 1)
        total = total + power.div(FixedReal(denom), prec)
        power = power.mul(xx, prec)
    return SeriesResult(total, n_max, SeriesKind.MACLAURIN)


def atan_euler(x: FixedReal, n_max: int, prec: Precision) -> SeriesResult:
    """Euler's transformed series.

    Term n is c_n * x^(2n+1)/(1+x^2)^(n+1) with c_n = 2^(2n) (n!)^2/(2n+1)!.
    Successive coefficients satisfy c_{n+1} = c_n * 2(n+1)/(2n+3), so the
    terms are built incrementally instead of from factorials.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    w = prec.workscale
    if x.mantissa == 0:
        return SeriesResult(FixedReal(0, w), n_max, SeriesKind.EULER)
    xx = x.mul(x, prec)
    one_plus = _ONE.round_to(w) + xx
    ratio = xx.div(one_plus, prec)  # x^2/(1+x^2)
    term = x.div(one_plus, prec)
    total = FixedReal(0, w)
    for n in range(n_max + 1):
        total = total + term
        term = (term.mul(ratio, prec) * (2 * (n + 1))).div(FixedReal(2 * n + 3), prec)
    return SeriesResult(total, n_max, SeriesKind.EULER)


def atan_complex_oracle(x: float, M: int, n_max: int) -> float:
    """Double-precision evaluation of the complex-power form (oracle role).

    Sums n = 0..n_max-1, matching n_max terms of the real iteration. The
    imaginary residue must vanish to machine accuracy and is discarded.
    """
    if M < 1 or n_max < 1:
        raise ValueError("M and n_max must be >= 1")
    total = 0.0j
    for m in range(1, M + 1):
        base = x * (2 * m - 1) / (2 * M)
        for n in range(n_max):
            p = 2 * n + 1
            total += x**p / ((2 * M) ** p * p) * ((base + 1j) ** -p - (base - 1j) ** -p)
    total *= 1j
    if abs(total.imag) >= 1e-13:
        raise ArithmeticError(f"imaginary residue {total.imag!r} exceeds tolerance")
    return total.real


def terms_for_digits(x: FixedReal, M: int, digits: int) -> int:
    """Terms per subinterval so the first omitted term is below 10**-digits.

    Uses the decay factor of the innermost (slowest) subinterval,
    rho = r^2/(1+r^2) with r = |x|/(2M), plus two safety terms.
    """
    if x.mantissa == 0:
        return 1
    log_r = (math.log10(abs(x.mantissa)) - x.scale) - math.log10(2 * M)
    if log_r < -150:
        per_term = -2.0 * log_r
    elif log_r > 150:
        raise ValueError("|x| too large for direct summation; range-reduce or raise M")
    else:
        per_term = math.log1p(10.0 ** (-2 * log_r)) / _LN10
    if per_term <= 0.0:
        raise ValueError("|x| too large for direct summation; range-reduce or raise M")
    return max(1, math.ceil(digits / per_term) + 2)


def atan_to_precision(x: FixedReal, prec: Precision, M: int = 1) -> SeriesResult:
    """Evaluate with n_max chosen automatically for the working scale."""
    return atan_emi(x, M, terms_for_digits(x, M, prec.workscale), prec)
