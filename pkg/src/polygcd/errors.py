"""Exception types shared across the package.

The CLI maps these onto exit codes: input problems exit 1, cap overruns
exit 2, internal invariant breaches exit 3.
"""


class PolyGcdError(Exception):
    """Base class for all package errors."""


class ParseError(PolyGcdError, ValueError):
    """Syntax error in a polynomial expression; carries the 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InputError(PolyGcdError, ValueError):
    """Invalid input: non-monic polynomial, degree 0, bad modulus, and so on."""


class CapExceeded(PolyGcdError, RuntimeError):
    """A configured work cap (brute-force period, divisor count) was exceeded."""


class CriterionInapplicable(PolyGcdError):
    """The p^p-free hypothesis behind the coprime-witness search fails.

    This says nothing about whether a witness exists; it only means the
    sufficient criterion cannot be applied.
    """


class FactorizationFailed(PolyGcdError, RuntimeError):
    """Pollard rho exhausted its retry budget without splitting a composite."""


class InvariantBreach(PolyGcdError, RuntimeError):
    """An internal cross-check failed.  Indicates a bug, not bad input."""
