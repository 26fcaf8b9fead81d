"""Exceptions for Invariants App."""

from apps.utils.exceptions import PreconditionError
from apps.utils.exceptions import SimulationError


class InvalidGridError(PreconditionError):
    code = "invalid_grid"


class EnergyGapClosedError(PreconditionError):
    """The occupied and empty bands touch at a grid point."""

    code = "energy_gap_closed"


class SpinGapClosedError(PreconditionError):
    """The projected spin spectrum is degenerate at a grid point."""

    code = "spin_gap_closed"


class IllConditionedLinkError(SimulationError):
    """A link overlap vanished, usually because the grid is too coarse."""

    code = "ill_conditioned_link"
