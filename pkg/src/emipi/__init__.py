"""Arbitrary-precision arctangent and pi toolkit.

Built around a generalized arctangent expansion obtained from midpoint
integration with even-derivative corrections: a double sum over M
subintervals whose per-term weights come from a surd- and complex-free
two-step iteration. On top of it sit baseline series (Maclaurin, Euler),
the general quadrature rule, and a two-term Machin-like formula pipeline
with a self-checking pi reference.
"""

from .convergence import (
    CSV_HEADER,
    ConvergenceRecord,
    default_grid,
    log10_fixed,
    run_grid,
    write_csv,
)
from .errors import (
    AmbiguousRounding,
    DigitCapExceeded,
    DivisionByZero,
    DomainError,
    EmipiError,
    EmptyInterval,
    InsufficientScale,
    NegativeOperand,
    SelfCheckFailed,
    ZeroArgument,
)
from .fixedreal import (
    FixedReal,
    Precision,
    default_guard,
    floor_log10,
    leading_zero_count,
    round_half_even,
    to_scientific,
)
from .machin import (
    MachinTwoTerm,
    NestedRadicalPair,
    auto_terms,
    binomial_pi_series,
    build_two_term,
    digit_gain_profile,
    format_record,
    gamma_select,
    machin_eval,
    nested_radical,
    parse_record,
    quarter_pi_residual,
    second_argument_exact,
    second_argument_fixed,
)
from .quadrature import (
    ArctanKernelProvider,
    CentralDifferenceProvider,
    DerivativeProvider,
    PolynomialProvider,
    QuadratureSpec,
    atan_integrand_derivative,
    emi_integrate,
    emi_integrate_exact,
    interval_transform,
)
from .rational import BigRational, double_angle_step
from .reference import reference_atan, require_agreement, self_check_pi
from .series import (
    AlphaBetaState,
    GammaArg,
    SeriesKind,
    SeriesResult,
    alpha_beta_init,
    alpha_beta_step,
    atan_complex_oracle,
    atan_emi,
    atan_emi_m1,
    atan_euler,
    atan_maclaurin,
    atan_to_precision,
    terms_for_digits,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaBetaState",
    "AmbiguousRounding",
    "ArctanKernelProvider",
    "BigRational",
    "CSV_HEADER",
    "CentralDifferenceProvider",
    "ConvergenceRecord",
    "DerivativeProvider",
    "DigitCapExceeded",
    "DivisionByZero",
    "DomainError",
    "EmipiError",
    "EmptyInterval",
    "FixedReal",
    "GammaArg",
    "InsufficientScale",
    "MachinTwoTerm",
    "NegativeOperand",
    "NestedRadicalPair",
    "PolynomialProvider",
    "Precision",
    "QuadratureSpec",
    "SelfCheckFailed",
    "SeriesKind",
    "SeriesResult",
    "ZeroArgument",
    "alpha_beta_init",
    "alpha_beta_step",
    "atan_complex_oracle",
    "atan_emi",
    "atan_emi_m1",
    "atan_euler",
    "atan_integrand_derivative",
    "atan_maclaurin",
    "atan_to_precision",
    "auto_terms",
    "binomial_pi_series",
    "build_two_term",
    "default_grid",
    "default_guard",
    "digit_gain_profile",
    "double_angle_step",
    "emi_integrate",
    "emi_integrate_exact",
    "floor_log10",
    "format_record",
    "gamma_select",
    "interval_transform",
    "leading_zero_count",
    "log10_fixed",
    "machin_eval",
    "nested_radical",
    "parse_record",
    "quarter_pi_residual",
    "reference_atan",
    "require_agreement",
    "round_half_even",
    "run_grid",
    "second_argument_exact",
    "second_argument_fixed",
    "self_check_pi",
    "terms_for_digits",
    "to_scientific",
    "write_csv",
]
