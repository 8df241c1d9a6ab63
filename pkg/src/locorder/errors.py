"""Exceptions shared across the package."""


class LocOrderError(Exception):
    pass


class UnknownProblemError(LocOrderError, KeyError):
    pass


class UnknownMethodError(LocOrderError, KeyError):
    pass


class DomainError(LocOrderError, ValueError):
    """Function evaluated outside its domain (``ln x`` with ``x <= 0``)."""


class RootRefinementError(LocOrderError):
    pass


class StepError(LocOrderError, ArithmeticError):
    """Zero derivative or degenerate divided difference inside a step."""


class DegenerateSecantError(StepError):
    pass


class DegenerateExtrapolationError(LocOrderError, ArithmeticError):
    """Aitken second difference vanished."""


class NotAsymptoticError(LocOrderError, ValueError):
    """Estimator input has magnitude >= 1, so the log ratio is meaningless."""


class EstimatorUndefinedError(LocOrderError, ArithmeticError):
    pass


class ModelInvalidError(LocOrderError, ValueError):
    pass


class UsageError(LocOrderError, ValueError):
    pass


class ConvergedExactly(Exception):
    """A zero error, difference or residual was hit.

    Not a failure: the driver finalizes the run on this signal.
    """
