"""Per-series error grids over x, and their CSV rendering.

The default grid mirrors the published figure setup: x from -20 to 20 in
steps of pi/20 (rounded to 12 decimals so the grid values are exact
decimals), every series truncated at n_max = 10. Reference precision is
raised per grid point until it clears the smallest measured error by a
fixed dominance margin, so no error row is precision-limited.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .fixedreal import FixedReal, Precision, to_scientific
from .reference import reference_atan, self_check_pi
from .series import atan_emi, atan_euler, atan_maclaurin

CSV_HEADER = "series,x,M,n_max,abs_error,log10_error"
KNOWN_SERIES = ("maclaurin", "euler", "emi")
DEFAULT_M = (1, 2, 3, 4, 5)
GRID_SCALE = 12
DOMINANCE_DIGITS = 25
_MAX_REF_DIGITS = 260
_REF_BUMP = 40


@dataclass(frozen=True, slots=True)
class ConvergenceRecord:
    series: str
    x: FixedReal
    M: int
    n_max: int
    abs_error: FixedReal
    log10_error: float


def log10_fixed(x: FixedReal) -> float:
    """log10 |x| as a float64 plot column; -inf for an exact zero."""
    if x.mantissa == 0:
        return float("-inf")
    return math.log10(abs(x.mantissa)) - x.scale


def default_grid(scale: int = GRID_SCALE) -> list[FixedReal]:
    """x = -20, -20 + pi/20, ... up to 20, as exact scale-digit decimals."""
    step = self_check_pi(scale + 8).div(FixedReal(20), Precision(scale + 8)).round_to(scale)
    xs: list[FixedReal] = []
    k = 0
    while True:
        x = FixedReal(-20) + step * k
        if x > FixedReal(20):
            return xs
        xs.append(x)
        k += 1


def _series_value(name: str, x: FixedReal, M: int, n_max: int, prec: Precision) -> FixedReal:
    if name == "maclaurin":
        return atan_maclaurin(x, n_max, prec).value
    if name == "euler":
        return atan_euler(x, n_max, prec).value
    if name == "emi":
        return atan_emi(x, M, n_max, prec).value
    raise ValueError(f"unknown series {name!r}")


def run_grid(
    xs: Sequence[FixedReal] | None = None,
    series: Sequence[str] = KNOWN_SERIES,
    m_values: Sequence[int] = DEFAULT_M,
    n_max: int = 10,
    ref_digits: int = 60,
) -> list[ConvergenceRecord]:
    """One record per (series, x, M), ordered series, then x ascending, then M.

    Non-subinterval series carry M = 0. The reference (and the series
    evaluation alongside it) is recomputed at higher precision whenever a
    cell's error comes within DOMINANCE_DIGITS of the reference accuracy.
    """
    for name in series:
        if name not in KNOWN_SERIES:
            raise ValueError(f"unknown series {name!r}")
    grid = sorted(default_grid() if xs is None else xs)
    cells: dict[tuple[str, int, int], ConvergenceRecord] = {}
    for ix, x in enumerate(grid):
        digits = ref_digits
        while True:
            prec = Precision(digits)
            if x.mantissa == 0:
                ref = FixedReal(0, prec.workscale)
            else:
                ref = reference_atan(x, digits)
            errors: dict[tuple[str, int], FixedReal] = {}
            for name in series:
                for m in m_values if name == "emi" else (0,):
                    value = _series_value(name, x, max(m, 1), n_max, prec)
                    errors[(name, m)] = abs(value - ref)
            floor = FixedReal(1, digits - DOMINANCE_DIGITS)
            limited = any(e.mantissa != 0 and e < floor for e in errors.values())
            if not limited or digits >= _MAX_REF_DIGITS:
                break
            digits += _REF_BUMP
        for (name, m), err in errors.items():
            cells[(name, ix, m)] = ConvergenceRecord(name, x, m, n_max, err, log10_fixed(err))
    ordered: list[ConvergenceRecord] = []
    for name in series:
        for ix in range(len(grid)):
            for m in sorted(m_values) if name == "emi" else (0,):
                ordered.append(cells[(name, ix, m)])
    return ordered


def write_csv(records: Iterable[ConvergenceRecord], out: TextIO) -> None:
    """Byte-deterministic CSV: fixed formats, fixed row order from the caller."""
    out.write(CSV_HEADER + "\n")
    for r in records:
        log = "-inf" if r.log10_error == float("-inf") else f"{r.log10_error:.6f}"
        out.write(
            f"{r.series},{r.x},{r.M},{r.n_max},{to_scientific(r.abs_error, 20)},{log}\n"
        )


def write_table(records: Iterable[ConvergenceRecord], out: TextIO) -> None:
    """Plain text rendering of the same rows."""
    out.write(f"{'series':<10} {'x':>18} {'M':>2} {'n_max':>5} {'log10_error':>12}\n")
    for r in records:
        log = "-inf" if r.log10_error == float("-inf") else f"{r.log10_error:.3f}"
        out.write(f"{r.series:<10} {str(r.x):>18} {r.M:>2} {r.n_max:>5} {log:>12}\n")
