"""Command to check the rotating frame against the lab frame."""

from django.core.management.base import BaseCommand

from apps.runs.mixins import RunCommandMixin
from apps.runs.services import run_frames_check


class Command(RunCommandMixin, BaseCommand):
    help = "Integrate the driven four-level system and compare frames"
    service = run_frames_check
