"""Exception hierarchy shared by every evaluator."""


class VarrecError(Exception):
    """Base class for errors raised by this package."""


class RealizationMismatch(VarrecError, TypeError):
    """Operands come from different scalar realizations."""


class DomainError(VarrecError, ValueError):
    """An index lies outside the domain where a quantity is defined."""


class EvaluationError(VarrecError, ArithmeticError):
    """A source could not produce a value (e.g. division by zero)."""


class ResourceError(VarrecError):
    """A request exceeds a configured exponential-size cap."""


class DimensionError(VarrecError, ValueError):
    """Vector operands have incompatible lengths."""
