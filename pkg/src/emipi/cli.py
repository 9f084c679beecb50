"""Command-line front-end.

Subcommands: atan, pi, convergence, integrate, gamma, self-check.
Exit codes: 0 success, 2 configuration or parse error, 3 self-check
failure, 4 exact-rational digit cap exceeded.
"""

from __future__ import annotations

import argparse
import io
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .convergence import (
    DEFAULT_M,
    KNOWN_SERIES,
    default_grid,
    run_grid,
    write_csv,
    write_table,
)
from .errors import DigitCapExceeded, EmipiError, SelfCheckFailed
from .fixedreal import FixedReal, Precision, default_guard, to_scientific
from .machin import (
    auto_terms,
    build_two_term,
    digit_gain_profile,
    gamma_select,
    machin_eval,
    quarter_pi_residual,
)
from .quadrature import (
    ArctanKernelProvider,
    PolynomialProvider,
    QuadratureSpec,
    emi_integrate,
)
from .reference import reference_atan, self_check_pi
from .series import atan_emi, terms_for_digits

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SELF_CHECK = 3
EXIT_DIGIT_CAP = 4


@dataclass
class RunReport:
    """Reproducible run summary; only the timing field varies between runs."""

    command: str
    digits: int
    guard: int
    terms: int
    elapsed_ms: float
    digest: str

    def lines(self) -> list[str]:
        return [
            f"# command: {self.command}",
            f"# digits: {self.digits}  guard: {self.guard}",
            f"# terms: {self.terms}",
            f"# elapsed_ms: {self.elapsed_ms:.1f}",
            f"# digest: {self.digest}",
        ]


def _digest(text: str) -> str:
    clean = "".join(ch for ch in text if ch.isdigit())
    if len(clean) <= 40:
        return clean
    return f"{clean[:20]}..{clean[-20:]}"


def _precision(args, terms: int = 0) -> Precision:
    guard = args.guard if args.guard else default_guard(args.digits, terms)
    return Precision(args.digits, guard)


def _emit(text: str, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# --------------------------------------------------------------- subcommands


def cmd_atan(args) -> int:
    x = FixedReal.from_str(args.x)
    prec = _precision(args)
    if args.range_reduce and abs(x) > FixedReal(1):
        ax = abs(x)
        inv = FixedReal(1).div(ax, prec)
        n = args.n_max or terms_for_digits(inv, args.M, prec.workscale)
        half_pi = self_check_pi(prec.workscale).div(FixedReal(2), prec)
        value = half_pi - atan_emi(inv, args.M, n, prec).value
        if x.mantissa < 0:
            value = -value
    else:
        n = args.n_max or terms_for_digits(x, args.M, prec.workscale)
        value = atan_emi(x, args.M, n, prec).value
    _emit(value.to_decimal(args.digits), args)
    return EXIT_OK


def cmd_pi(args) -> int:
    start = time.perf_counter()
    second_digits = args.second_arg_digits or max(args.digits, 50)
    if args.digits > second_digits:
        raise ValueError(
            f"--digits {args.digits} exceeds the {second_digits}-digit residual argument; "
            "raise --second-arg-digits"
        )
    formula = build_two_term(
        args.k,
        Precision(second_digits),
        mode=args.mode,
        grain=args.grain,
        digit_cap=args.digit_cap,
        require_exact=args.exact,
    )
    prec = _precision(args, terms=args.digits)
    n = args.n_max or auto_terms(formula, args.M, prec)
    value = machin_eval(formula, args.M, n, prec)
    reference = self_check_pi(args.digits)
    text = value.to_decimal(args.digits)
    if text != reference.to_decimal(args.digits):
        raise SelfCheckFailed(
            f"k={args.k} formula digits disagree with the two-formula reference"
        )
    elapsed = (time.perf_counter() - start) * 1e3
    report = RunReport(
        command=f"pi -k {args.k} --digits {args.digits}",
        digits=args.digits,
        guard=prec.guard,
        terms=n,
        elapsed_ms=elapsed,
        digest=_digest(text),
    )
    out = [text]
    out.extend(report.lines())
    if args.report_rate:
        profile_digits = min(560, second_digits)
        profile_prec = Precision(profile_digits, default_guard(profile_digits, 64))
        pi_ref = self_check_pi(profile_prec.workscale)
        profile = digit_gain_profile(formula, args.M, 2, 30, profile_prec, pi_ref)
        out.append("# digits-per-increment profile (n_max, correct digits, gain):")
        previous = None
        gains = []
        for n_used, digits_ok in profile:
            gain = "" if previous is None else f" +{digits_ok - previous}"
            out.append(f"#   n={n_used:<3d} {digits_ok}{gain}")
            if previous is not None:
                gains.append(digits_ok - previous)
            previous = digits_ok
        if gains:
            out.append(f"# gain min/max: {min(gains)}/{max(gains)}")
    _emit("\n".join(out), args)
    return EXIT_OK


def _parse_step(text: str, scale: int) -> FixedReal:
    if text.startswith("pi/"):
        denom = int(text[3:])
        if denom < 1:
            raise ValueError("step divisor must be >= 1")
        return (
            self_check_pi(scale + 8)
            .div(FixedReal(denom), Precision(scale + 8))
            .round_to(scale)
        )
    step = FixedReal.from_str(text).round_to(scale)
    if step.mantissa <= 0:
        raise ValueError("step must be positive")
    return step


def cmd_convergence(args) -> int:
    series = tuple(s.strip() for s in args.series.split(",") if s.strip())
    m_values = tuple(int(v) for v in args.m_list.split(","))
    if any(m < 1 for m in m_values):
        raise ValueError("M values must be >= 1")
    if args.x_min is None and args.x_max is None and args.x_step == "pi/20":
        xs = default_grid()
    else:
        lo = FixedReal.from_str(args.x_min if args.x_min is not None else "-20")
        hi = FixedReal.from_str(args.x_max if args.x_max is not None else "20")
        if not lo < hi:
            raise ValueError("need x-min < x-max")
        step = _parse_step(args.x_step, scale=12)
        xs = []
        k = 0
        while True:
            x = lo.round_to(12) + step * k
            if x > hi:
                break
            xs.append(x)
            k += 1
    records = run_grid(
        xs,
        series=series,
        m_values=m_values,
        n_max=args.n_max if args.n_max else 10,
        ref_digits=args.ref_digits,
    )
    buffer = io.StringIO()
    if args.format == "csv":
        write_csv(records, buffer)
    else:
        write_table(records, buffer)
    _emit(buffer.getvalue(), args)
    return EXIT_OK


def _parse_integrand(text: str):
    """Catalog: poly:c0,c1,..., atan-kernel:x, runge (= 1/(1+t^2))."""
    if text == "runge":
        return ArctanKernelProvider(FixedReal(1)), FixedReal(1)
    if text.startswith("poly:"):
        coeffs = [Fraction(part) for part in text[len("poly:"):].split(",")]
        return PolynomialProvider.from_coeffs(coeffs), None
    if text.startswith("atan-kernel:"):
        x = FixedReal.from_str(text[len("atan-kernel:"):])
        return ArctanKernelProvider(x), x
    raise ValueError(f"unknown integrand {text!r}")


def cmd_integrate(args) -> int:
    provider, kernel_x = _parse_integrand(args.integrand)
    a = FixedReal.from_str(args.a)
    b = FixedReal.from_str(args.b)
    prec = _precision(args, terms=(args.N + 1) * args.M)
    spec = QuadratureSpec(args.M, args.N, a, b)
    estimate = emi_integrate(provider, spec, prec)
    lines = [estimate.to_decimal(args.digits)]
    exact = None
    if isinstance(provider, PolynomialProvider):
        exact = FixedReal.from_fraction(
            provider.integral_exact(a.to_fraction(), b.to_fraction()), prec.workscale
        )
    elif kernel_x is not None and kernel_x.mantissa != 0:
        # integral of x/(1+x^2 t^2) over (a,b) is arctan(x b) - arctan(x a)
        xb = FixedReal(kernel_x.mantissa * b.mantissa, kernel_x.scale + b.scale)
        xa = FixedReal(kernel_x.mantissa * a.mantissa, kernel_x.scale + a.scale)
        exact = reference_atan(xb, prec.workscale) - reference_atan(xa, prec.workscale)
    if exact is not None:
        lines.append(f"# abs_error: {to_scientific(abs(estimate - exact), 6)}")
    _emit("\n".join(lines), args)
    return EXIT_OK


def cmd_gamma(args) -> int:
    prec = _precision(args)
    gamma = gamma_select(args.k, args.grain, args.mode, prec)
    text = str(gamma.numerator) if gamma.denominator == 1 else f"{gamma.numerator}/{gamma.denominator}"
    lines = [text]
    if args.residual:
        pi_value = self_check_pi(args.digits)
        residual = quarter_pi_residual(args.k, gamma, pi_value, prec)
        lines.append(f"# residual 2^(k-1)/gamma - pi/4: {to_scientific(residual, 6)}")
    _emit("\n".join(lines), args)
    return EXIT_OK


def cmd_self_check(args) -> int:
    value = self_check_pi(args.digits, args.guard)
    _emit(value.to_decimal(args.digits), args)
    return EXIT_OK


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=30, help="output digits (default 30)")
    common.add_argument("--guard", type=int, default=0, help="override guard digits (>= 10)")
    common.add_argument("-M", type=int, default=1, dest="M", help="subinterval count (default 1)")
    common.add_argument("-n", "--n-max", type=int, default=None, dest="n_max",
                        help="terms per subinterval (default: chosen from the decay rate)")
    common.add_argument("--out", default=None, help="write output to a file instead of stdout")
    common.add_argument("--format", choices=("text", "csv"), default="text")

    parser = argparse.ArgumentParser(
        prog="emipi",
        description="Arbitrary-precision arctangent and pi via subinterval series expansions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_atan = sub.add_parser("atan", parents=[common], help="arctangent of a decimal argument")
    p_atan.add_argument("x", help="argument as a decimal string")
    p_atan.add_argument("--range-reduce", action="store_true",
                        help="use pi/2 - arctan(1/x) for |x| > 1 (faster for large x)")
    p_atan.set_defaults(func=cmd_atan)

    p_pi = sub.add_parser("pi", parents=[common], help="pi from a generated two-term formula")
    p_pi.add_argument("-k", type=int, default=27, help="formula index (default 27)")
    p_pi.add_argument("--second-arg-digits", type=int, default=None,
                      help="digits carried by the residual argument (default max(digits, 50))")
    p_pi.add_argument("--grain", type=int, default=0, help="gamma lattice 10^-grain (default integer)")
    p_pi.add_argument("--mode", choices=("floor", "ceil"), default="floor")
    p_pi.add_argument("--digit-cap", type=int, default=1_000_000,
                      help="digit budget for the exact residual (default 1e6)")
    p_pi.add_argument("--exact", action="store_true",
                      help="require the exact residual; fails when the cap is exceeded")
    p_pi.add_argument("--report-rate", action="store_true",
                      help="report correct digits of pi per increment of n_max")
    p_pi.set_defaults(func=cmd_pi)

    p_conv = sub.add_parser("convergence", parents=[common],
                            help="per-series absolute-error grid as CSV")
    p_conv.add_argument("--x-min", default=None)
    p_conv.add_argument("--x-max", default=None)
    p_conv.add_argument("--x-step", default="pi/20", help="decimal or pi/<int> (default pi/20)")
    p_conv.add_argument("--series", default=",".join(KNOWN_SERIES))
    p_conv.add_argument("--m-list", default=",".join(str(m) for m in DEFAULT_M))
    p_conv.add_argument("--ref-digits", type=int, default=60)
    p_conv.set_defaults(func=cmd_convergence, format="csv")

    p_int = sub.add_parser("integrate", parents=[common],
                           help="integrate a catalog integrand over (a, b)")
    p_int.add_argument("integrand", help="poly:c0,c1,... | atan-kernel:x | runge")
    p_int.add_argument("a")
    p_int.add_argument("b")
    p_int.add_argument("-N", type=int, default=4, help="derivative correction order (default 4)")
    p_int.set_defaults(func=cmd_integrate)

    p_gamma = sub.add_parser("gamma", parents=[common],
                             help="gamma selection for the two-term formula")
    p_gamma.add_argument("-k", type=int, required=True)
    p_gamma.add_argument("--grain", type=int, default=0)
    p_gamma.add_argument("--mode", choices=("floor", "ceil"), default="floor")
    p_gamma.add_argument("--residual", action="store_true",
                         help="also print 2^(k-1)/gamma - pi/4")
    p_gamma.set_defaults(func=cmd_gamma)

    p_check = sub.add_parser("self-check", parents=[common],
                             help="pi certified by two independent formulas")
    p_check.set_defaults(func=cmd_self_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SelfCheckFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SELF_CHECK
    except DigitCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIGIT_CAP
    except (EmipiError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
