"""Exception types shared across the package."""


class EmipiError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(EmipiError, ZeroDivisionError):
    """Division where the divisor is exactly zero."""


class NegativeOperand(EmipiError, ValueError):
    """Square root of a negative value."""


class InsufficientScale(EmipiError, ValueError):
    """More fractional digits requested than the value carries."""


class ZeroArgument(EmipiError, ValueError):
    """The iteration product x*t vanished; arctan(0) = 0 must be handled by the caller."""


class EmptyInterval(EmipiError, ValueError):
    """Integration interval with a >= b."""


class DomainError(EmipiError, ValueError):
    """A derivative provider could not evaluate at a requested node."""


class AmbiguousRounding(EmipiError, ArithmeticError):
    """A floor/ceil decision fell within guard-digit noise; retry with more precision."""


class DigitCapExceeded(EmipiError, OverflowError):
    """An exact rational outgrew the configured digit budget."""


class SelfCheckFailed(EmipiError, ArithmeticError):
    """Two independent computations of the same constant disagree."""
