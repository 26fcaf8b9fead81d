"""Validators for Utils App."""

import math

from django.core.exceptions import ValidationError
from django.utils.deconstruct import deconstructible
from django.utils.translation import gettext_lazy as _


def validate_finite(value):
    """Validate that a numeric value is neither NaN nor infinite."""
    if not math.isfinite(value):
        raise ValidationError(
            _("Value must be a finite number, got %(value)s."),
            code="not_finite",
            params={"value": value},
        )


def validate_nonzero(value):
    """Validate that a numeric value is not zero."""
    if value == 0:
        raise ValidationError(_("Value must be non-zero."), code="zero")


@deconstructible
class StrictlyPositiveValidator:
    """Validator to ensure a value lies strictly above a lower bound."""

    message = _("Ensure this value is greater than %(limit)s.")
    code = "not_strictly_positive"

    def __init__(self, limit=0.0, message=None, code=None):
        self.limit = limit
        if message is not None:
            self.message = message
        if code is not None:
            self.code = code

    def __call__(self, value):
        if not value > self.limit:
            raise ValidationError(
                self.message,
                code=self.code,
                params={"limit": self.limit, "value": value},
            )

    def __eq__(self, other):
        return (
            isinstance(other, StrictlyPositiveValidator)
            and self.limit == other.limit
            and self.message == other.message
            and self.code == other.code
        )
