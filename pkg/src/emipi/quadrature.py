"""Enhanced midpoint integration.

The rule evaluates

    integral_0^1 f = 2 * sum_{m=1..M} sum_{n=0..N}
                     f^(2n)((m-1/2)/M) / ((2M)^(2n+1) (2n+1)!)

i.e. the composite midpoint rule plus even-derivative corrections; odd
orders contribute nothing and are never requested. General intervals are
mapped onto (0,1) affinely: providers are always asked for derivatives in
the original variable, and the engine applies the chain-rule width factors
itself.

Providers supply the derivatives explicitly. Exact-rational providers may
additionally implement ``derivative_exact`` so the same sum can be carried
in Fraction arithmetic, which is what makes polynomial results exactly
equal to the true integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Protocol, runtime_checkable

from .errors import EmptyInterval
from .fixedreal import FixedReal, Precision
from .series import GammaArg, alpha_beta_init, alpha_beta_step


@runtime_checkable
class DerivativeProvider(Protocol):
    """Evaluator of even-order derivatives of an integrand."""

    def derivative(self, t: FixedReal, order: int, prec: Precision) -> FixedReal:
        """d^order f / dt^order at t; order is even and >= 0."""


@runtime_checkable
class ExactDerivativeProvider(Protocol):
    def derivative_exact(self, t: Fraction, order: int) -> Fraction: ...


@dataclass(frozen=True, slots=True)
class QuadratureSpec:
    """Subinterval count M, correction order N, and the interval (a, b)."""

    M: int
    N: int
    a: FixedReal
    b: FixedReal

    def __post_init__(self) -> None:
        if self.M < 1:
            raise ValueError("M must be >= 1")
        if self.N < 0:
            raise ValueError("N must be >= 0")
        if not self.a < self.b:
            raise EmptyInterval("need a < b")


def interval_transform(a: FixedReal, b: FixedReal, t: FixedReal) -> FixedReal:
    """Affine image (b-a)*t + a of t in [0,1]; computed exactly."""
    if not a < b:
        raise EmptyInterval("need a < b")
    width = b - a
    return FixedReal(width.mantissa * t.mantissa, width.scale + t.scale) + a


def emi_integrate(f: DerivativeProvider, spec: QuadratureSpec, prec: Precision) -> FixedReal:
    """Apply the correction-augmented midpoint rule at working precision."""
    w = prec.workscale
    width = spec.b - spec.a
    width_sq = width.mul(width, prec)
    total = FixedReal(0, w)
    for m in range(1, spec.M + 1):
        node = interval_transform(spec.a, spec.b, GammaArg(m, spec.M).value(prec))
        wpow = width.round_to(w)  # (b-a)^(2n+1)
        coeff = 2 * spec.M  # (2M)^(2n+1) * (2n+1)!
        for n in range(spec.N + 1):
            deriv = f.derivative(node, 2 * n, prec)
            total = total + (deriv.mul(wpow, prec) * 2).div(FixedReal(coeff), prec)
            wpow = wpow.mul(width_sq, prec)
            coeff *= (2 * spec.M) ** 2 * (2 * n + 2) * (2 * n + 3)
    return total


def emi_integrate_exact(f: ExactDerivativeProvider, spec: QuadratureSpec) -> Fraction:
    """The same double sum carried in exact rational arithmetic."""
    a, b = spec.a.to_fraction(), spec.b.to_fraction()
    width = b - a
    total = Fraction(0)
    for m in range(1, spec.M + 1):
        node = width * GammaArg(m, spec.M).exact + a
        wpow = width
        coeff = 2 * spec.M
        for n in range(spec.N + 1):
            total += 2 * f.derivative_exact(node, 2 * n) * wpow / coeff
            wpow *= width * width
            coeff *= (2 * spec.M) ** 2 * (2 * n + 2) * (2 * n + 3)
    return total


def atan_integrand_derivative(
    x: FixedReal, t: FixedReal, order: int, prec: Precision
) -> FixedReal:
    """Even-order t-derivative of x/(1 + x^2 t^2), surd- and complex-free.

    For order 2j and u = x*t the derivative equals

        (2j)! * t^-(2j+1) * alpha_{j+1} / (alpha_{j+1}^2 + beta_{j+1}^2)

    with (alpha, beta) from the series iteration at u; at t = 0 the
    Maclaurin coefficient (-1)^j (2j)! x^(2j+1) is used instead.
    """
    if order < 0 or order % 2:
        raise ValueError("order must be even and >= 0")
    w = prec.workscale
    j = order // 2
    if x.mantissa == 0:
        return FixedReal(0, w)
    if t.mantissa == 0:
        xx = x.mul(x, prec)
        value = x.round_to(w)
        for _ in range(j):
            value = value.mul(xx, prec)
        value = value * math.factorial(order)
        return (-value if j % 2 else value).round_to(w)
    state = alpha_beta_init(x, t, prec)
    for _ in range(j):
        state = alpha_beta_step(state, prec)
    norm = state.alpha.mul(state.alpha, prec) + state.beta.mul(state.beta, prec)
    tt = t.mul(t, prec)
    tpow = t.round_to(w)
    for _ in range(j):
        tpow = tpow.mul(tt, prec)
    return (state.alpha * math.factorial(order)).div(norm.mul(tpow, prec), prec)


@dataclass(frozen=True)
class PolynomialProvider:
    """Polynomial with exact rational coefficients, constant term first."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, values) -> "PolynomialProvider":
        return cls(tuple(Fraction(v) for v in values))

    @property
    def degree(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return 0

    def derivative_exact(self, t: Fraction, order: int) -> Fraction:
        coeffs = list(self.coeffs)
        for _ in range(order):
            coeffs = [k * c for k, c in enumerate(coeffs)][1:]
            if not coeffs:
                return Fraction(0)
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * t + c
        return acc

    def derivative(self, t: FixedReal, order: int, prec: Precision) -> FixedReal:
        return FixedReal.from_fraction(
            self.derivative_exact(t.to_fraction(), order), prec.workscale
        )

    def integral_exact(self, a: Fraction, b: Fraction) -> Fraction:
        total = Fraction(0)
        for k, c in enumerate(self.coeffs):
            total += c * (b ** (k + 1) - a ** (k + 1)) / (k + 1)
        return total


@dataclass(frozen=True, slots=True)
class ArctanKernelProvider:
    """Derivatives of x/(1 + x^2 t^2); with x = 1 this is 1/(1 + t^2)."""

    x: FixedReal

    def derivative(self, t: FixedReal, order: int, prec: Precision) -> FixedReal:
        return atan_integrand_derivative(self.x, t, order, prec)


_CD_STEPS = {2: 1e-4, 4: 2e-3, 6: 2e-2}


class CentralDifferenceProvider:
    """Double-precision central differences. Testing fallback only.

    Accuracy is limited by float64 cancellation; usable up to order 6 with
    order-dependent step sizes.
    """

    def __init__(self, func: Callable[[float], float], steps: dict[int, float] | None = None):
        self.func = func
        self.steps = dict(_CD_STEPS if steps is None else steps)

    def derivative_float(self, t: float, order: int) -> float:
        if order < 0 or order % 2:
            raise ValueError("order must be even and >= 0")
        if order == 0:
            return self.func(t)
        h = self.steps[order]
        half = order // 2
        total = 0.0
        for j in range(order + 1):
            total += (-1) ** j * math.comb(order, j) * self.func(t + (half - j) * h)
        return total / h**order

    def derivative(self, t: FixedReal, order: int, prec: Precision) -> FixedReal:
        return FixedReal.from_fraction(
            Fraction(self.derivative_float(float(t), order)), prec.workscale
        )
