"""Exceptions for Runs App."""

from apps.utils.exceptions import DetailedError
from apps.utils.exceptions import SimulationError


class ConfigError(DetailedError, ValueError):
    """The run configuration cannot be read or does not validate."""

    code = "config_error"


class OutputPathError(DetailedError):
    code = "unwritable_output"


class FramesCheckFailedError(SimulationError):
    """Lab-frame and rotating-frame evolutions disagree."""

    code = "frames_check_failed"
