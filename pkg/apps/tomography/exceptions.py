"""Exceptions for Tomography App."""

from apps.utils.exceptions import SimulationError


class InconsistentDataError(SimulationError):
    """Unfolded populations left the physical range."""

    code = "inconsistent_data"
