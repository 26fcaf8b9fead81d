"""Choices for Runs App."""

from django.db.models import TextChoices
from django.utils.translation import gettext_lazy as _


class RecordStatus(TextChoices):
    OK = "ok", _("Invariants computed")
    GAP_CLOSED = "gap-closed", _("Energy or spin gap closed")


class RunCommand(TextChoices):
    ULINK = "ulink", _("U-link invariants")
    LR = "lr", _("Linear-response curvature")
    SWEEP = "sweep", _("U-link and linear response")
    TOMOGRAPHY = "tomography", _("Tomography pipeline check")
    FRAMES_CHECK = "frames-check", _("Lab against rotating frame")
