"""Exception types shared across the package.

The CLI maps ``ValidationError`` to exit code 2 and ``BudgetError`` to 3.
"""


class PsbvError(Exception):
    """Base class for all package errors."""


class ValidationError(PsbvError, ValueError):
    """A parameter is malformed or outside its admissible range."""


class BudgetError(PsbvError):
    """A request exceeds a configured computation budget."""


class ExactArithmeticError(ValidationError, ZeroDivisionError):
    """Exact rational operation with no defined result (division by zero)."""


class QuadratureError(PsbvError):
    """Adaptive quadrature failed to converge within its depth limit."""
