"""Exceptions for BHZ App."""

from apps.utils.exceptions import PreconditionError


class InvalidParametersError(PreconditionError):
    code = "invalid_parameters"


class ClosureViolationError(PreconditionError):
    """The four microwave detunings do not close (delta prime is non-zero)."""

    code = "closure_violation"
