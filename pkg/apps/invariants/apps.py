"""Configs for Invariants App."""

from django.apps import AppConfig


class InvariantsConfig(AppConfig):
    name = "apps.invariants"
    verbose_name = "Topological invariants"
