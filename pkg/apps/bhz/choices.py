"""Choices for BHZ App."""

from django.db.models import IntegerChoices
from django.utils.translation import gettext_lazy as _


class Pseudospin(IntegerChoices):
    """Pseudospin sectors; the value is the block sign tau."""

    PLUS = 1, _("Plus (S+)")
    MINUS = -1, _("Minus (S-)")
