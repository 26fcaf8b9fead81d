"""Configs for Linalg App."""

from django.apps import AppConfig


class LinalgConfig(AppConfig):
    name = "apps.linalg"
    verbose_name = "Dense Hermitian linear algebra"
