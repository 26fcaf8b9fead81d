"""Configs for Tomography App."""

from django.apps import AppConfig


class TomographyConfig(AppConfig):
    name = "apps.tomography"
    verbose_name = "Population tomography"
