"""Configs for Dynamics App."""

from django.apps import AppConfig


class DynamicsConfig(AppConfig):
    name = "apps.dynamics"
    verbose_name = "Driven dynamics and linear response"
