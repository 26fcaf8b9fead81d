"""Exceptions for Utils App."""

from functools import partial


class DetailedError(Exception):
    """Error carrying a message and a structured payload."""

    code = "error"

    def __init__(self, message, **payload):
        super().__init__(message)
        self.message = message
        self.payload = payload

    def __str__(self):
        if not self.payload:
            return self.message
        details = ", ".join(f"{key}={value}" for key, value in self.payload.items())
        return f"{self.message} ({details})"

    def __reduce__(self):
        # Worker processes send errors back pickled; keep the payload.
        return partial(type(self), self.message, **self.payload), ()


class SimulationError(DetailedError):
    """Base class for every numerical failure raised by the simulation apps."""

    code = "simulation_error"


class PreconditionError(SimulationError, ValueError):
    """An operation was called with inputs that break its contract."""

    code = "precondition_error"
