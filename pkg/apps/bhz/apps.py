"""Configs for BHZ App."""

from django.apps import AppConfig


class BhzConfig(AppConfig):
    name = "apps.bhz"
    verbose_name = "BHZ model"
