"""Configs for Utils App."""

from django.apps import AppConfig


class UtilsConfig(AppConfig):
    name = "apps.utils"
    verbose_name = "Shared utilities"
