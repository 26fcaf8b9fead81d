"""Settings for config project (Test)."""

from .base import *  # noqa: F403

DEBUG = False

SECRET_KEY = "test-simulation-key"  # noqa: S105

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "level": "WARNING",
            "formatter": "simple",
        },
    },
    "loggers": {
        "apps": {
            "level": "WARNING",
            "handlers": ["console"],
            "propagate": False,
        },
    },
    "formatters": {
        "simple": {
            "format": "{asctime}:{levelname} {message}",
            "style": "{",
        },
    },
}
