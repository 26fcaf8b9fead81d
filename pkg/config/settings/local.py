"""Settings for config project (Local)."""

from .base import *  # noqa: F403

DEBUG = True

SECRET_KEY = env("SECRET_KEY", default="local-simulation-key")  # noqa: F405
