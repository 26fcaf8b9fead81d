"""Exceptions for Dynamics App."""

from apps.utils.exceptions import PreconditionError
from apps.utils.exceptions import SimulationError


class InvalidProtocolError(PreconditionError):
    code = "invalid_protocol"


class InitialStatePreparationError(PreconditionError):
    """No spin-split ground pair exists at the start of the sweep."""

    code = "initial_state_preparation"


class InvalidStateError(PreconditionError):
    code = "invalid_state"


class IntegratorError(SimulationError):
    """The propagated state drifted away from norm 2."""

    code = "integrator_failure"


class NonUniformSamplingError(PreconditionError):
    code = "non_uniform_sampling"
