"""Choices for Dynamics App."""

from django.db.models import TextChoices
from django.utils.translation import gettext_lazy as _


class ReferenceMode(TextChoices):
    """Where the adiabatic force subtracted from the measured force comes from."""

    ADIABATIC = "adiabatic", _("Instantaneous spin-split occupied state")
    INITIAL = "initial", _("Spin-split occupied state at the sweep start")
    CONSTANT = "paper-constant", _("Constant 4B sin ky")


class IntegrationScheme(TextChoices):
    """Exponential propagator used for every substep."""

    MAGNUS4 = "magnus4", _("Fourth-order commutator-free Magnus")
    MIDPOINT = "midpoint", _("Midpoint exponential")
