"""Settings for config project (Production)."""

from .base import *  # noqa: F403

DEBUG = False

SECRET_KEY = env("SECRET_KEY")  # noqa: F405

LOGGING["loggers"]["apps"]["level"] = "INFO"  # noqa: F405
