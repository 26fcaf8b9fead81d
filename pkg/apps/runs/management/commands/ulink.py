"""Command to compute U-link spin Chern numbers over a sweep."""

from django.core.management.base import BaseCommand

from apps.runs.mixins import RunCommandMixin
from apps.runs.services import run_ulink


class Command(RunCommandMixin, BaseCommand):
    help = "Compute U-link Chern numbers and gaps at every sweep point"
    service = run_ulink
