"""Command to measure spin Chern numbers by linear response."""

from django.core.management.base import BaseCommand

from apps.runs.mixins import RunCommandMixin
from apps.runs.services import run_lr


class Command(RunCommandMixin, BaseCommand):
    help = "Integrate linear-response Berry curvature at every sweep point"
    service = run_lr
