"""Command to run U-link and linear response over a sweep."""

from django.core.management.base import BaseCommand

from apps.runs.mixins import RunCommandMixin
from apps.runs.services import run_sweep


class Command(RunCommandMixin, BaseCommand):
    help = "Compute U-link and linear-response spin Chern numbers side by side"
    service = run_sweep
