"""Exact rational arithmetic helpers.

fractions.Fraction already keeps values in lowest terms with a positive
denominator and never rounds, so it serves directly as the exact-ratio
type. This module adds the exact trigonometric step the formula pipeline
needs on top of it.
"""

from __future__ import annotations

from fractions import Fraction

BigRational = Fraction


def double_angle_step(s: Fraction, c: Fraction) -> tuple[Fraction, Fraction]:
    """Map (sin t, cos t) to (sin 2t, cos 2t) exactly.

    The caller guarantees s*s + c*c == 1; the image then satisfies the same
    identity because (2sc)^2 + (c^2 - s^2)^2 = (s^2 + c^2)^2.
    """
    return 2 * s * c, (c - s) * (c + s)
