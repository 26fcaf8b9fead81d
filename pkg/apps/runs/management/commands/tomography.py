"""Command to check the tomography pipeline along one sweep."""

from django.core.management.base import BaseCommand

from apps.runs.mixins import RunCommandMixin
from apps.runs.services import run_tomography


class Command(RunCommandMixin, BaseCommand):
    help = "Compare reconstructed and direct Bloch vectors along one ky line"
    service = run_tomography
