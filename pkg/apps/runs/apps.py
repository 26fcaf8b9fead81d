"""Configs for Runs App."""

from django.apps import AppConfig


class RunsConfig(AppConfig):
    name = "apps.runs"
    verbose_name = "Simulation runs"
