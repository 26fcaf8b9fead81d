"""Exceptions for Linalg App."""

from apps.utils.exceptions import PreconditionError
from apps.utils.exceptions import SimulationError


class NotHermitianError(PreconditionError):
    code = "not_hermitian"


class DimensionError(PreconditionError):
    code = "unsupported_dimension"


class DegenerateInputError(PreconditionError):
    code = "degenerate_input"


class EigenSolverError(SimulationError):
    code = "eigensolver_not_converged"
