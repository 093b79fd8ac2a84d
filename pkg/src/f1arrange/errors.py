"""Exception hierarchy.

Input problems derive from :class:`InputError`, resource caps from
:class:`BudgetError`, and self-check failures raise
:class:`InternalTheoremViolation`.  The CLI maps these to exit codes 2, 3
and 1 respectively.
"""


class F1ArrangeError(Exception):
    """Base class for all package errors."""


class InputError(F1ArrangeError, ValueError):
    pass


class ZeroNormal(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class AffineNotSupported(InputError):
    """Raised by operations that need a central arrangement; cone first."""


class NonSimpleCycle(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DenominatorDivisibleByP(InputError, ZeroDivisionError):
    pass


class UncertifiedPrime(InputError):
    """The prime does not preserve the intersection lattice."""


class BudgetError(F1ArrangeError):
    pass


class RecursionBudgetExceeded(BudgetError):
    pass


class SubsetBudgetExceeded(BudgetError):
    pass


class BudgetExceeded(BudgetError):
    pass


class InternalTheoremViolation(F1ArrangeError, AssertionError):
    """A proven equivalence failed on a concrete instance.

    This always indicates an implementation bug, never bad input.
    """
